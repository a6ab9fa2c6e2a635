#include "burn/dense.hpp"

#include "burn/errors.hpp"
#include "burn/isqrt.hpp"

#include <algorithm>

namespace burn {

std::vector<Vertex> greedy_separated_set(const Graph& g, Distance r) {
    std::vector<Vertex> picked;
    std::vector<bool> removed(g.size(), false);
    for (Vertex v = 0; v < g.size(); ++v) {
        if (removed[v]) continue;
        picked.push_back(v);
        for (Vertex w : ball(g, v, 2 * r)) removed[w] = true;
    }
    return picked;
}

std::uint64_t ball_lower_bound(Distance r, std::size_t delta) {
    return (std::uint64_t{r} + 2) / 3 * (std::uint64_t{delta} + 1);
}

Round dense_bound(std::size_t n, std::size_t delta) {
    return static_cast<Round>(ceil_sqrt_ratio(24 * std::uint64_t{n}, std::uint64_t{delta} + 1));
}

DenseBurnPlan burn_dense(const Graph& g) {
    const auto n = g.size();
    if (n == 0) throw PreconditionError("cannot burn the empty graph");
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");

    DenseBurnPlan plan;
    if (n == 1) {
        plan.activator_set = {0};
        plan.schedule.activators = {0};
        plan.bound = dense_bound(1, 0);
        plan.used_radius_shortcut = true;
        return plan;
    }

    const auto m = metrics(g);
    const std::uint64_t delta1 = m.min_degree + 1;
    plan.bound = dense_bound(n, m.min_degree);

    // r*^2 = 3n / (2(delta+1)); compare in integers.
    const std::uint64_t num = 3 * std::uint64_t{n};
    const std::uint64_t den = 2 * delta1;
    const std::uint64_t rad = m.radius;
    if (rad * rad * den < num) {
        plan.used_radius_shortcut = true;
        plan.activator_set = {m.center_vertex};
        plan.schedule = pad_with_unburned(g, BurningSchedule{{m.center_vertex}});
        return plan;
    }

    const auto lo = floor_sqrt_ratio(num, den);
    const auto hi = ceil_sqrt_ratio(num, den);
    Round best_completion = 0;
    bool have_best = false;
    for (auto candidate : {lo, hi}) {
        if (candidate < 1 || candidate > rad) continue;
        const auto r = static_cast<Distance>(candidate);
        if (have_best && r == plan.r) continue;
        auto set = greedy_separated_set(g, r);
        auto schedule = pad_with_unburned(g, BurningSchedule{set});
        const auto completion = simulate(g, schedule).completion_round;
        if (!have_best || completion < best_completion) {
            have_best = true;
            best_completion = completion;
            plan.r = r;
            plan.activator_set = std::move(set);
            plan.schedule = std::move(schedule);
        }
    }
    return plan;
}

} // namespace burn
