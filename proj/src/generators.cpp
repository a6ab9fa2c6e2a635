#include "burn/generators.hpp"

#include "burn/errors.hpp"
#include "burn/pathlen.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace burn {

namespace {

void record(GeneratedInstance& inst) {
    const auto m = metrics(inst.graph);
    inst.min_degree = m.min_degree;
    inst.diameter = m.diameter;
    if (inst.decomposition) inst.decomposition_length = length_of(inst.graph, *inst.decomposition).length;
}

GeneratedInstance finish(Family family, std::vector<std::uint64_t> params, std::uint64_t seed,
                         Graph g, std::optional<Decomposition> t) {
    GeneratedInstance inst;
    inst.family = family;
    inst.params = std::move(params);
    inst.seed = seed;
    inst.graph = std::move(g);
    inst.decomposition = std::move(t);
    record(inst);
    return inst;
}

} // namespace

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw InputError("uniform_below needs a positive bound");
    // 2^64 mod bound; values below it would bias the modulus
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

std::string to_string(Family f) {
    switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Star: return "star";
    case Family::Spider: return "spider";
    case Family::Grid: return "grid";
    case Family::RandomMinDegree: return "random_min_degree";
    case Family::Interval: return "interval";
    case Family::KTreeChordal: return "ktree_chordal";
    }
    return "unknown";
}

GeneratedInstance gen_path(std::size_t n) {
    if (n < 1) throw InputError("path needs at least one vertex");
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> bags;
    for (Vertex i = 0; i + 1 < n; ++i) {
        edges.emplace_back(i, i + 1);
        bags.push_back({i, i + 1});
    }
    if (n == 1) bags.push_back({0});
    return finish(Family::Path, {n}, 0, Graph::from_edges(n, edges),
                  Decomposition::path(std::move(bags)));
}

GeneratedInstance gen_cycle(std::size_t n) {
    if (n < 3) throw InputError("cycle needs at least three vertices");
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> bags;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    for (Vertex i = 1; i + 1 < n; ++i) bags.push_back({0, i, i + 1});
    return finish(Family::Cycle, {n}, 0, Graph::from_edges(n, edges),
                  Decomposition::path(std::move(bags)));
}

GeneratedInstance gen_star(std::size_t leaves) {
    if (leaves < 1) throw InputError("star needs at least one leaf");
    std::vector<Edge> edges;
    Decomposition t;
    for (Vertex i = 1; i <= leaves; ++i) {
        edges.emplace_back(0, i);
        t.bags.push_back({0, i});
        t.parent.push_back(i == 1 ? std::nullopt : std::optional<BagIndex>(0));
    }
    t.root = 0;
    return finish(Family::Star, {leaves}, 0, Graph::from_edges(leaves + 1, edges), std::move(t));
}

GeneratedInstance gen_spider(std::size_t legs, std::size_t leg_length) {
    if (legs < 1 || leg_length < 1) throw InputError("spider needs legs >= 1 and length >= 1");
    std::vector<Edge> edges;
    Decomposition t;
    // bag_of_edge_to[v] = index of the bag {parent(v), v}
    std::vector<BagIndex> bag_to(1 + legs * leg_length, 0);
    for (std::size_t leg = 0; leg < legs; ++leg) {
        for (std::size_t step = 0; step < leg_length; ++step) {
            const auto v = static_cast<Vertex>(1 + leg * leg_length + step);
            const Vertex up = step == 0 ? 0 : v - 1;
            edges.emplace_back(up, v);
            bag_to[v] = t.bags.size();
            t.bags.push_back({up, v});
            if (t.bags.size() == 1) t.parent.push_back(std::nullopt);
            else if (step == 0) t.parent.push_back(BagIndex{0});
            else t.parent.push_back(bag_to[up]);
        }
    }
    t.root = 0;
    return finish(Family::Spider, {legs, leg_length}, 0,
                  Graph::from_edges(1 + legs * leg_length, edges), std::move(t));
}

GeneratedInstance gen_grid(std::size_t rows, std::size_t cols) {
    auto grid = grid_decomposition(rows, cols);
    return finish(Family::Grid, {rows, cols}, 0, std::move(grid.graph),
                  std::move(grid.decomposition));
}

GeneratedInstance gen_random_min_degree(std::size_t n, std::size_t delta, std::uint64_t seed) {
    if (n < 1 || delta >= n) throw InputError("random_min_degree needs n >= 1 and delta < n");
    Rng rng(seed);
    std::vector<std::set<Vertex>> adj(n);
    auto link = [&](Vertex u, Vertex v) {
        adj[u].insert(v);
        adj[v].insert(u);
    };

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
    for (std::size_t i = 1; i < n; ++i) link(order[i], order[uniform_below(rng, i)]);

    for (Vertex v = 0; v < n; ++v) {
        while (adj[v].size() < delta) {
            std::vector<Vertex> candidates;
            for (Vertex w = 0; w < n; ++w) {
                if (w != v && !adj[v].contains(w)) candidates.push_back(w);
            }
            link(v, candidates[uniform_below(rng, candidates.size())]);
        }
    }

    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex w : adj[u]) {
            if (u < w) edges.emplace_back(u, w);
        }
    }
    return finish(Family::RandomMinDegree, {n, delta}, seed, Graph::from_edges(n, edges),
                  std::nullopt);
}

GeneratedInstance interval_instance(const std::vector<Interval>& intervals) {
    const auto count = intervals.size();
    if (count == 0) throw InputError("interval family needs at least one interval");
    auto meets = [&](std::size_t i, std::size_t j) {
        return intervals[i].left <= intervals[j].right && intervals[j].left <= intervals[i].right;
    };

    // largest component; the earliest-found one wins ties
    std::vector<int> comp(count, -1);
    std::vector<std::size_t> best;
    for (std::size_t s = 0; s < count; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> members{s};
        comp[s] = static_cast<int>(s);
        for (std::size_t q = 0; q < members.size(); ++q) {
            for (std::size_t j = 0; j < count; ++j) {
                if (comp[j] < 0 && meets(members[q], j)) {
                    comp[j] = static_cast<int>(s);
                    members.push_back(j);
                }
            }
        }
        if (members.size() > best.size()) best = std::move(members);
    }
    std::sort(best.begin(), best.end());

    GeneratedInstance inst;
    for (auto i : best) inst.intervals.push_back(intervals[i]);
    const auto& kept = inst.intervals;
    const auto n = kept.size();

    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (kept[u].left <= kept[v].right && kept[v].left <= kept[u].right) edges.emplace_back(u, v);
        }
    }
    std::vector<std::int64_t> starts;
    for (const auto& iv : kept) starts.push_back(iv.left);
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());
    std::vector<std::vector<Vertex>> bags;
    for (auto p : starts) {
        std::vector<Vertex> bag;
        for (Vertex v = 0; v < n; ++v) {
            if (kept[v].left <= p && p <= kept[v].right) bag.push_back(v);
        }
        bags.push_back(std::move(bag));
    }

    inst.family = Family::Interval;
    inst.graph = Graph::from_edges(n, edges);
    inst.decomposition = Decomposition::path(std::move(bags));
    record(inst);
    return inst;
}

GeneratedInstance gen_interval(std::size_t n, std::uint64_t max_coord, std::uint64_t seed) {
    if (n < 1) throw InputError("interval family needs n >= 1");
    Rng rng(seed);
    std::vector<Interval> intervals;
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = static_cast<std::int64_t>(uniform_below(rng, max_coord + 1));
        const auto b = static_cast<std::int64_t>(uniform_below(rng, max_coord + 1));
        intervals.push_back({std::min(a, b), std::max(a, b)});
    }
    auto inst = interval_instance(intervals);
    inst.params = {n, max_coord};
    inst.seed = seed;
    return inst;
}

GeneratedInstance gen_ktree_chordal(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k < 1 || n <= k) throw InputError("ktree needs n > k >= 1");
    Rng rng(seed);
    std::vector<Edge> edges;
    Decomposition t;
    std::vector<Vertex> base(k + 1);
    std::iota(base.begin(), base.end(), Vertex{0});
    for (Vertex u = 0; u <= k; ++u) {
        for (Vertex v = u + 1; v <= k; ++v) edges.emplace_back(u, v);
    }
    t.bags.push_back(base);
    t.parent.push_back(std::nullopt);

    for (auto v = static_cast<Vertex>(k + 1); v < n; ++v) {
        const auto host = uniform_below(rng, t.bags.size());
        const auto drop = uniform_below(rng, k + 1);
        std::vector<Vertex> bag;
        for (std::size_t i = 0; i <= k; ++i) {
            if (i != drop) bag.push_back(t.bags[host][i]);
        }
        for (Vertex u : bag) edges.emplace_back(u, v);
        bag.push_back(v); // v exceeds every earlier id, so the bag stays sorted
        t.bags.push_back(std::move(bag));
        t.parent.push_back(host);
    }
    t.root = 0;
    return finish(Family::KTreeChordal, {n, k}, seed, Graph::from_edges(n, edges), std::move(t));
}

} // namespace burn
