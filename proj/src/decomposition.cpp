#include "burn/decomposition.hpp"

#include "burn/errors.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace burn {

namespace {

std::string bag_name(BagIndex b) { return "bag " + std::to_string(b + 1); }

std::string edge_name(Vertex u, Vertex v) {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

std::optional<Violation> check_structure(const Decomposition& t) {
    const auto xi = t.size();
    auto fail = [](std::string msg) {
        return std::optional<Violation>(Violation{Violation::Axiom::Structure, std::move(msg)});
    };
    if (xi == 0) return fail("decomposition has no bags");
    if (t.parent.size() != xi) return fail("parent table size does not match bag count");
    if (t.root >= xi) return fail("root " + bag_name(t.root) + " does not exist");
    if (t.parent[t.root]) return fail("root " + bag_name(t.root) + " has a parent");
    for (BagIndex b = 0; b < xi; ++b) {
        if (b == t.root) continue;
        if (!t.parent[b]) return fail(bag_name(b) + " has no parent but is not the root");
        if (*t.parent[b] >= xi) return fail(bag_name(b) + " has a parent that does not exist");
        if (*t.parent[b] == b) return fail(bag_name(b) + " is its own parent");
    }
    // every bag must reach the root; a cycle never does
    std::vector<int> state(xi, 0); // 0 unknown, 1 on stack, 2 reaches root
    state[t.root] = 2;
    for (BagIndex b = 0; b < xi; ++b) {
        std::vector<BagIndex> trail;
        BagIndex cur = b;
        while (state[cur] == 0) {
            state[cur] = 1;
            trail.push_back(cur);
            cur = *t.parent[cur];
        }
        if (state[cur] == 1) return fail("parent links form a cycle through " + bag_name(cur));
        for (auto x : trail) state[x] = 2;
    }
    for (BagIndex b = 0; b < xi; ++b) {
        if (!std::is_sorted(t.bags[b].begin(), t.bags[b].end()) ||
            std::adjacent_find(t.bags[b].begin(), t.bags[b].end()) != t.bags[b].end()) {
            return fail(bag_name(b) + " is not sorted or repeats a vertex");
        }
    }
    return std::nullopt;
}

} // namespace

Decomposition Decomposition::path(std::vector<std::vector<Vertex>> bags) {
    Decomposition t;
    t.parent.resize(bags.size());
    for (BagIndex i = 1; i < bags.size(); ++i) t.parent[i] = i - 1;
    for (auto& bag : bags) std::sort(bag.begin(), bag.end());
    t.bags = std::move(bags);
    t.root = 0;
    return t;
}

DecompositionKind Decomposition::kind() const {
    std::vector<std::size_t> tree_degree(size(), 0);
    for (BagIndex b = 0; b < size(); ++b) {
        if (parent[b]) {
            ++tree_degree[b];
            ++tree_degree[*parent[b]];
        }
    }
    const bool path = std::all_of(tree_degree.begin(), tree_degree.end(),
                                  [](auto d) { return d <= 2; });
    return path ? DecompositionKind::Path : DecompositionKind::Tree;
}

std::vector<std::vector<BagIndex>> Decomposition::children() const {
    std::vector<std::vector<BagIndex>> out(size());
    for (BagIndex b = 0; b < size(); ++b) {
        if (parent[b]) out[*parent[b]].push_back(b);
    }
    return out;
}

std::vector<std::size_t> Decomposition::depth() const {
    std::vector<std::size_t> out(size(), 0);
    const auto kids = children();
    std::deque<BagIndex> queue{root};
    while (!queue.empty()) {
        const auto b = queue.front();
        queue.pop_front();
        for (auto c : kids[b]) {
            out[c] = out[b] + 1;
            queue.push_back(c);
        }
    }
    return out;
}

std::vector<BagIndex> Decomposition::subtree(BagIndex b) const {
    const auto kids = children();
    std::vector<BagIndex> out{b};
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (auto c : kids[out[i]]) out.push_back(c);
    }
    return out;
}

std::optional<BagIndex> Decomposition::canonical_bag(Vertex v) const {
    for (BagIndex b = 0; b < size(); ++b) {
        if (bag_contains(b, v)) return b;
    }
    return std::nullopt;
}

bool Decomposition::bag_contains(BagIndex b, Vertex v) const {
    return std::binary_search(bags.at(b).begin(), bags.at(b).end(), v);
}

std::optional<Violation> validate(const Graph& g, const Decomposition& t) {
    if (auto v = check_structure(t)) return v;
    const auto n = g.size();

    std::vector<std::vector<BagIndex>> holders(n);
    for (BagIndex b = 0; b < t.size(); ++b) {
        for (Vertex v : t.bags[b]) {
            if (v >= n) {
                return Violation{Violation::Axiom::VertexRange,
                                 bag_name(b) + " names vertex " + std::to_string(v) +
                                     " but the graph has " + std::to_string(n) + " vertices"};
            }
            holders[v].push_back(b);
        }
    }
    // Edges first: an uncovered edge is the more specific witness when one
    // of its ends is also missing from every bag.
    for (const auto& [u, v] : g.edges()) {
        const bool covered = std::any_of(holders[u].begin(), holders[u].end(),
                                         [&](BagIndex b) { return t.bag_contains(b, v); });
        if (!covered) {
            return Violation{Violation::Axiom::EdgeCoverage,
                             "edge " + edge_name(u, v) + " is in no bag"};
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (holders[v].empty()) {
            return Violation{Violation::Axiom::VertexCoverage,
                             "vertex " + std::to_string(v) + " is in no bag"};
        }
    }
    // The bags holding v form a subtree iff exactly one of them has a parent
    // that does not hold v.
    for (Vertex v = 0; v < n; ++v) {
        std::vector<BagIndex> tops;
        for (auto b : holders[v]) {
            if (!t.parent[b] || !t.bag_contains(*t.parent[b], v)) tops.push_back(b);
        }
        if (tops.size() != 1) {
            std::string msg = "bags holding vertex " + std::to_string(v) +
                              " are not connected in the tree (separate pieces topped by";
            for (auto b : tops) msg += " " + std::to_string(b + 1);
            return Violation{Violation::Axiom::Connectivity, msg + ")"};
        }
    }
    return std::nullopt;
}

DecompositionLength length_of(const Graph& g, const Decomposition& t) {
    std::unordered_map<Vertex, DistanceOracle> cache;
    DecompositionLength out;
    for (const auto& bag : t.bags) {
        for (std::size_t i = 0; i + 1 < bag.size(); ++i) {
            auto it = cache.find(bag[i]);
            if (it == cache.end()) it = cache.emplace(bag[i], bfs(g, bag[i])).first;
            for (std::size_t j = i + 1; j < bag.size(); ++j) {
                const auto d = it->second[bag[j]];
                if (!d) {
                    throw PreconditionError("bag members " + std::to_string(bag[i]) + " and " +
                                            std::to_string(bag[j]) + " are disconnected");
                }
                out.length = std::max(out.length, *d);
            }
        }
    }
    return out;
}

Decomposition trim(const Graph& /*g*/, const Decomposition& t) {
    const auto kids = t.children();
    std::vector<bool> removed(t.size(), false);
    std::vector<std::vector<Vertex>> below(t.size());

    // post-order over the tree, iteratively
    std::vector<BagIndex> order;
    std::vector<BagIndex> stack{t.root};
    while (!stack.empty()) {
        const auto b = stack.back();
        stack.pop_back();
        order.push_back(b);
        for (auto c : kids[b]) stack.push_back(c);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const auto b = *it;
        std::vector<Vertex> acc = t.bags[b];
        for (auto c : kids[b]) {
            if (removed[c]) continue;
            std::vector<Vertex> merged;
            std::set_union(acc.begin(), acc.end(), below[c].begin(), below[c].end(),
                           std::back_inserter(merged));
            acc.swap(merged);
        }
        if (b != t.root) {
            const auto& up = t.bags[*t.parent[b]];
            if (std::includes(up.begin(), up.end(), acc.begin(), acc.end())) {
                for (auto s : t.subtree(b)) removed[s] = true;
                continue;
            }
        }
        below[b] = std::move(acc);
    }

    std::vector<BagIndex> remap(t.size(), 0);
    Decomposition out;
    for (BagIndex b = 0; b < t.size(); ++b) {
        if (removed[b]) continue;
        remap[b] = out.bags.size();
        out.bags.push_back(t.bags[b]);
    }
    out.parent.resize(out.bags.size());
    for (BagIndex b = 0; b < t.size(); ++b) {
        if (removed[b] || !t.parent[b]) continue;
        out.parent[remap[b]] = remap[*t.parent[b]];
    }
    out.root = remap[t.root];
    return out;
}

bool separator_check(const Graph& g, const Decomposition& t, BagIndex j) {
    if (j >= t.size()) throw InputError(bag_name(j) + " does not exist");
    if (j == t.root) throw InputError("separator check is undefined for the root bag");

    const auto sub = t.subtree(j);
    std::vector<bool> in_sub(t.size(), false);
    for (auto b : sub) in_sub[b] = true;

    std::vector<bool> removed(g.size(), false), inside(g.size(), false), outside(g.size(), false);
    for (Vertex v : t.bags[j]) removed[v] = true;
    for (BagIndex b = 0; b < t.size(); ++b) {
        for (Vertex v : t.bags[b]) {
            if (removed[v]) continue;
            (in_sub[b] ? inside : outside)[v] = true;
        }
    }

    std::vector<bool> seen(g.size(), false);
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (inside[v]) {
            seen[v] = true;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        if (outside[u]) return false;
        for (Vertex w : g.neighbors(u)) {
            if (!removed[w] && !seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return true;
}

std::vector<BagIndex> bag_path(const Decomposition& t, BagIndex a, BagIndex b) {
    const auto dep = t.depth();
    std::vector<BagIndex> up_a{a}, up_b{b};
    while (dep[up_a.back()] > dep[up_b.back()]) up_a.push_back(*t.parent[up_a.back()]);
    while (dep[up_b.back()] > dep[up_a.back()]) up_b.push_back(*t.parent[up_b.back()]);
    while (up_a.back() != up_b.back()) {
        up_a.push_back(*t.parent[up_a.back()]);
        up_b.push_back(*t.parent[up_b.back()]);
    }
    up_b.pop_back(); // common ancestor already ends up_a
    up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
    return up_a;
}

bool path_hits_bags(const Graph& g, const Decomposition& t, Vertex u, Vertex v) {
    const auto bu = t.canonical_bag(u);
    const auto bv = t.canonical_bag(v);
    if (!bu || !bv) throw InputError("vertex not covered by the decomposition");
    const auto p = shortest_path(g, u, v);
    if (p.empty()) throw PreconditionError("vertices are disconnected");
    std::vector<Vertex> on_path = p;
    std::sort(on_path.begin(), on_path.end());
    for (auto b : bag_path(t, *bu, *bv)) {
        const auto& bag = t.bags[b];
        std::vector<Vertex> common;
        std::set_intersection(bag.begin(), bag.end(), on_path.begin(), on_path.end(),
                              std::back_inserter(common));
        if (common.empty()) return false;
    }
    return true;
}

Decomposition reroot(const Decomposition& t, BagIndex new_root) {
    if (new_root >= t.size()) throw InputError(bag_name(new_root) + " does not exist");
    Decomposition out = t;
    // reverse the links on the path from new_root up to the old root
    std::optional<BagIndex> carried;
    BagIndex cur = new_root;
    while (true) {
        const auto up = t.parent[cur];
        out.parent[cur] = carried;
        if (!up) break;
        carried = cur;
        cur = *up;
    }
    out.root = new_root;
    return out;
}

std::vector<BagIndex> path_order(const Decomposition& t) {
    if (t.kind() != DecompositionKind::Path) {
        throw PreconditionError("decomposition is not a path decomposition");
    }
    const auto xi = t.size();
    if (xi == 0) return {};
    std::vector<std::vector<BagIndex>> adj(xi);
    for (BagIndex b = 0; b < xi; ++b) {
        if (t.parent[b]) {
            adj[b].push_back(*t.parent[b]);
            adj[*t.parent[b]].push_back(b);
        }
    }
    BagIndex start = t.root;
    if (adj[start].size() > 1) {
        for (BagIndex b = 0; b < xi; ++b) {
            if (adj[b].size() <= 1) {
                start = b;
                break;
            }
        }
    }
    std::vector<BagIndex> order{start};
    std::optional<BagIndex> prev;
    while (order.size() < xi) {
        const auto cur = order.back();
        const auto& nb = adj[cur];
        const auto next = (prev && nb[0] == *prev) ? nb.at(1) : nb.at(0);
        prev = cur;
        order.push_back(next);
    }
    return order;
}

} // namespace burn
