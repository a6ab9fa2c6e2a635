#pragma once

#include "burn/burning.hpp"
#include "burn/graph.hpp"

#include <cstdint>
#include <vector>

namespace burn {

/// Schedule built from a 2r-separated activator set.
struct DenseBurnPlan {
    /// Separation radius; 0 when the radius shortcut was taken.
    Distance r = 0;
    /// Greedy pick order; pairwise distances exceed 2r.
    std::vector<Vertex> activator_set;
    /// activator_set followed by padding activators.
    BurningSchedule schedule;
    /// ceil(sqrt(24n / (delta + 1))).
    Round bound = 0;
    bool used_radius_shortcut = false;
};

/// Greedy maximal set with pairwise distance > 2r: scan vertices in id
/// order, keep each one not yet within 2r of a kept vertex.
std::vector<Vertex> greedy_separated_set(const Graph& g, Distance r);

/// floor((r + 2) / 3) * (delta + 1): minimum size of any radius-r ball with
/// r <= ecc(v) in a graph of minimum degree delta.
std::uint64_t ball_lower_bound(Distance r, std::size_t delta);

/// ceil(sqrt(24n / (delta + 1))).
Round dense_bound(std::size_t n, std::size_t delta);

/// Burns g within dense_bound(n, delta) rounds.
///
/// If rad(G) is below r* = sqrt(3n / (2(delta+1))) the schedule starts at a
/// center vertex. Otherwise both integer neighbours of r* (clamped to
/// [1, rad]) are tried and the one whose padded schedule completes first is
/// kept, ties going to the smaller r. Throws PreconditionError for
/// disconnected or empty graphs.
DenseBurnPlan burn_dense(const Graph& g);

} // namespace burn
