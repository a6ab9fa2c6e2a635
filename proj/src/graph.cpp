#include "burn/graph.hpp"

#include "burn/errors.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace burn {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n) {
            throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                             "} references a vertex outside 0.." + std::to_string(n) + "-1");
        }
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& adj = g.adjacency_[v];
        std::sort(adj.begin(), adj.end());
        const auto dup = std::adjacent_find(adj.begin(), adj.end());
        if (dup != adj.end()) {
            throw InputError("duplicate edge {" + std::to_string(std::min<Vertex>(v, *dup)) + "," +
                             std::to_string(std::max<Vertex>(v, *dup)) + "}");
        }
    }
    g.edge_count_ = edges.size();
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& adj = adjacency_.at(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < size(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

DistanceOracle::DistanceOracle(Vertex source, std::vector<std::int64_t> raw)
    : source_(source), dist_(std::move(raw)) {}

bool DistanceOracle::spans_graph() const {
    return std::all_of(dist_.begin(), dist_.end(), [](auto d) { return d >= 0; });
}

Distance DistanceOracle::max_distance() const {
    std::int64_t best = 0;
    for (auto d : dist_) best = std::max(best, d);
    return static_cast<Distance>(best);
}

DistanceOracle bfs(const Graph& g, Vertex source) {
    if (source >= g.size()) {
        throw InputError("BFS source " + std::to_string(source) + " out of range for n=" +
                         std::to_string(g.size()));
    }
    std::vector<std::int64_t> dist(g.size(), -1);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return DistanceOracle(source, std::move(dist));
}

bool is_connected(const Graph& g) {
    if (g.size() <= 1) return true;
    return bfs(g, 0).spans_graph();
}

std::size_t min_degree(const Graph& g) {
    std::size_t best = g.size() == 0 ? 0 : g.degree(0);
    for (Vertex v = 1; v < g.size(); ++v) best = std::min(best, g.degree(v));
    return best;
}

MetricSummary metrics(const Graph& g) {
    if (g.size() == 0) throw PreconditionError("metrics of the empty graph are undefined");
    MetricSummary m;
    m.eccentricities.resize(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        const auto oracle = bfs(g, v);
        if (!oracle.spans_graph()) throw PreconditionError("graph is disconnected");
        m.eccentricities[v] = oracle.max_distance();
    }
    const auto [lo, hi] = std::minmax_element(m.eccentricities.begin(), m.eccentricities.end());
    m.radius = *lo;
    m.diameter = *hi;
    // min_element returns the first minimum, i.e. the lowest id.
    m.center_vertex = static_cast<Vertex>(lo - m.eccentricities.begin());
    m.min_degree = min_degree(g);
    return m;
}

std::vector<Vertex> ball(const Graph& g, Vertex v, Distance r) {
    const auto oracle = bfs(g, v);
    std::vector<Vertex> out;
    for (Vertex w = 0; w < g.size(); ++w) {
        const auto d = oracle[w];
        if (d && *d <= r) out.push_back(w);
    }
    return out;
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex u, Vertex v) {
    const auto from_u = bfs(g, u);
    if (v >= g.size()) throw InputError("path endpoint out of range");
    if (!from_u.reachable(v)) return {};
    std::vector<Vertex> path{v};
    Vertex cur = v;
    while (cur != u) {
        const Distance here = *from_u[cur];
        // neighbours are sorted, so the first hit is the lowest id
        for (Vertex w : g.neighbors(cur)) {
            const auto dw = from_u[w];
            if (dw && *dw + 1 == here) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<DistanceOracle> all_pairs(const Graph& g) {
    std::vector<DistanceOracle> out;
    out.reserve(g.size());
    for (Vertex v = 0; v < g.size(); ++v) out.push_back(bfs(g, v));
    return out;
}

} // namespace burn
