#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace burn {

using Vertex = std::uint32_t;
using Distance = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Instances are immutable once built; equality is structural.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n) : adjacency_(n) {}

    /// Builds a graph from an edge list. Throws InputError on self-loops,
    /// duplicate edges (in either orientation) or ids >= n.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t size() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool has_edge(Vertex u, Vertex v) const;

    /// All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Hop distances from a single source. Unreachable vertices have no distance.
class DistanceOracle {
public:
    DistanceOracle(Vertex source, std::vector<std::int64_t> raw);

    Vertex source() const { return source_; }
    std::size_t size() const { return dist_.size(); }

    std::optional<Distance> operator[](Vertex v) const {
        const auto d = dist_.at(v);
        if (d < 0) return std::nullopt;
        return static_cast<Distance>(d);
    }
    bool reachable(Vertex v) const { return dist_.at(v) >= 0; }

    /// True iff every vertex is reachable from the source.
    bool spans_graph() const;

    /// Largest finite distance (the source's eccentricity when spanning).
    Distance max_distance() const;

private:
    Vertex source_;
    std::vector<std::int64_t> dist_;
};

struct MetricSummary {
    std::vector<Distance> eccentricities;
    Distance radius = 0;
    Distance diameter = 0;
    std::size_t min_degree = 0;
    Vertex center_vertex = 0;
};

/// Throws InputError if source >= g.size().
DistanceOracle bfs(const Graph& g, Vertex source);

/// Exact radius, diameter, eccentricities and minimum degree.
/// Throws PreconditionError for disconnected or empty graphs.
MetricSummary metrics(const Graph& g);

/// Vertices within distance r of v, ascending.
std::vector<Vertex> ball(const Graph& g, Vertex v, Distance r);

bool is_connected(const Graph& g);

std::size_t min_degree(const Graph& g);

/// One shortest u-v path, u first. Each vertex's predecessor is its
/// lowest-id neighbour one step closer to u. Empty if v is unreachable.
std::vector<Vertex> shortest_path(const Graph& g, Vertex u, Vertex v);

/// BFS from every vertex; entry v is the oracle rooted at v.
std::vector<DistanceOracle> all_pairs(const Graph& g);

} // namespace burn
