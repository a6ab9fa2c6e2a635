#include "burn/pathlen.hpp"

#include "burn/errors.hpp"
#include "burn/isqrt.hpp"

#include <algorithm>

namespace burn {

namespace {

bool subset(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Vertex lowest_private(const std::vector<Vertex>& bag, const std::vector<Vertex>& neighbour) {
    for (Vertex v : bag) {
        if (!std::binary_search(neighbour.begin(), neighbour.end(), v)) return v;
    }
    throw PreconditionError("end bag has no private vertex");
}

} // namespace

std::vector<PathPlacement> path_burn_schedule(std::size_t vertex_count) {
    if (vertex_count == 0) return {};
    const auto k = static_cast<Round>(ceil_sqrt(vertex_count));
    std::vector<PathPlacement> out;
    std::size_t offset = 0;
    for (Round i = 1; i <= k; ++i) {
        const std::size_t half = k - i;
        out.push_back({std::min(offset + half, vertex_count - 1), i});
        offset += 2 * half + 1;
    }
    return out;
}

Decomposition normalize_path_decomposition(const Graph& /*g*/, const Decomposition& t) {
    std::vector<std::vector<Vertex>> bags;
    for (auto b : path_order(t)) bags.push_back(t.bags[b]);

    std::size_t first = 0, last = bags.size();
    while (last - first > 1) {
        if (subset(bags[first], bags[first + 1])) {
            ++first;
        } else if (subset(bags[last - 1], bags[last - 2])) {
            --last;
        } else {
            break;
        }
    }
    return Decomposition::path({bags.begin() + static_cast<std::ptrdiff_t>(first),
                                bags.begin() + static_cast<std::ptrdiff_t>(last)});
}

PathlenResult burn_pathlen(const Graph& g, const Decomposition& t) {
    if (g.size() == 0) throw PreconditionError("cannot burn the empty graph");
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
    if (auto v = validate(g, t)) throw PreconditionError("invalid decomposition: " + v->message);
    if (t.kind() != DecompositionKind::Path) {
        throw PreconditionError("pathlen needs a path decomposition, got a tree");
    }

    PathlenResult result;
    result.path_length = length_of(g, t).length;
    result.diameter = metrics(g).diameter;

    if (result.diameter < 2) {
        const auto exact = exact_burning_number(g);
        result.mode = PathlenResult::Mode::ExactFallback;
        result.schedule = exact.schedule;
        result.certified_bound = exact.rounds;
        return result;
    }

    const auto norm = normalize_path_decomposition(g, t);
    if (norm.size() == 1) {
        result.mode = PathlenResult::Mode::SingleBag;
        result.schedule = pad_with_unburned(g, BurningSchedule{{0}});
        result.certified_bound = 1 + result.path_length;
        return result;
    }

    SpinePlan plan;
    plan.x = lowest_private(norm.bags.front(), norm.bags[1]);
    plan.y = lowest_private(norm.bags.back(), norm.bags[norm.size() - 2]);
    // x and y share no bag, so the path has at least two edges
    const auto xy = shortest_path(g, plan.x, plan.y);
    plan.x_prime = xy[1];
    plan.y_prime = xy[xy.size() - 2];
    plan.spine = shortest_path(g, plan.x_prime, plan.y_prime);
    for (const auto& placed : path_burn_schedule(plan.spine.size())) {
        plan.spine_schedule.activators.push_back(plan.spine[placed.position]);
    }
    plan.total_bound = static_cast<Round>(ceil_sqrt(result.diameter - 1)) + result.path_length;

    result.mode = PathlenResult::Mode::Spine;
    result.schedule = pad_with_unburned(g, plan.spine_schedule);
    result.certified_bound = plan.total_bound;
    result.spine = std::move(plan);
    return result;
}

GridInstance grid_decomposition(std::size_t rows, std::size_t cols) {
    if (rows < 1 || cols < 2 || rows > cols) {
        throw InputError("grid decomposition needs 1 <= rows <= cols and cols >= 2");
    }
    auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    }
    std::vector<std::vector<Vertex>> bags;
    for (std::size_t c = 0; c + 1 < cols; ++c) {
        std::vector<Vertex> bag;
        for (std::size_t r = 0; r < rows; ++r) {
            bag.push_back(id(r, c));
            bag.push_back(id(r, c + 1));
        }
        bags.push_back(std::move(bag));
    }
    return {Graph::from_edges(rows * cols, edges), Decomposition::path(std::move(bags))};
}

} // namespace burn
