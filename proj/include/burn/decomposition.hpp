#pragma once

#include "burn/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace burn {

using BagIndex = std::size_t;

enum class DecompositionKind { Path, Tree };

/// Rooted tree of bags over graph vertices.
///
/// Bags are indexed 0..size()-1 in memory; the text format and all
/// user-facing messages use 1-based bag ids. A path decomposition is the
/// special case where the tree is a path; the canonical form is rooted at
/// bag 0 with parent(i) = i - 1.
struct Decomposition {
    /// Each bag sorted ascending, no duplicates.
    std::vector<std::vector<Vertex>> bags;
    /// parent[root] is empty; every other entry names the parent bag.
    std::vector<std::optional<BagIndex>> parent;
    BagIndex root = 0;

    std::size_t size() const { return bags.size(); }

    /// Path-shaped decomposition over `bags` in the given order.
    static Decomposition path(std::vector<std::vector<Vertex>> bags);

    /// Path iff every bag has at most two tree neighbours.
    DecompositionKind kind() const;

    std::vector<std::vector<BagIndex>> children() const;
    /// Tree distance from the root for each bag.
    std::vector<std::size_t> depth() const;
    /// Bags of the subtree rooted at b, b first.
    std::vector<BagIndex> subtree(BagIndex b) const;
    /// Lowest-index bag containing v, if any.
    std::optional<BagIndex> canonical_bag(Vertex v) const;
    bool bag_contains(BagIndex b, Vertex v) const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct Violation {
    enum class Axiom {
        Structure,        // parent links do not form a tree rooted at `root`
        VertexRange,      // a bag names a vertex >= n
        VertexCoverage,   // some vertex is in no bag
        EdgeCoverage,     // some edge has no bag holding both ends
        Connectivity,     // some vertex's bags are not a connected subtree
    };
    Axiom axiom;
    std::string message;
};

/// First violated axiom with witnesses, or nullopt if `t` is a valid
/// decomposition of g.
std::optional<Violation> validate(const Graph& g, const Decomposition& t);

struct DecompositionLength {
    Distance length = 0;
};

/// Max over bags of the largest graph distance between two bag members.
/// Throws PreconditionError if two bag members are disconnected in g.
DecompositionLength length_of(const Graph& g, const Decomposition& t);

/// Removes, to a fixpoint, every non-root subtree whose vertices all lie in
/// the subtree root's parent bag. Surviving bags keep their relative order.
Decomposition trim(const Graph& g, const Decomposition& t);

/// True iff deleting bag j's vertices leaves no path between the vertices
/// of j's subtree and the vertices outside it. Throws InputError if j is
/// the root or out of range.
bool separator_check(const Graph& g, const Decomposition& t, BagIndex j);

/// Bags on the tree path from a to b, inclusive, in order.
std::vector<BagIndex> bag_path(const Decomposition& t, BagIndex a, BagIndex b);

/// Takes one shortest u-v path P in g and the tree path between the
/// canonical bags of u and v; true iff every bag on it intersects P.
bool path_hits_bags(const Graph& g, const Decomposition& t, Vertex u, Vertex v);

/// Same tree with the parent links re-oriented towards `new_root`.
/// Throws InputError if new_root is out of range.
Decomposition reroot(const Decomposition& t, BagIndex new_root);

/// Bags of a path-shaped decomposition in order from one end, starting at
/// the root if it is an end bag, otherwise at the lowest-index end bag.
/// Throws PreconditionError if the decomposition is not path-shaped.
std::vector<BagIndex> path_order(const Decomposition& t);

} // namespace burn
