#pragma once

#include "burn/decomposition.hpp"
#include "burn/graph.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace burn {

// Seeded instance families. Randomness comes from std::mt19937_64 seeded
// directly with the user seed; integers are drawn with uniform_below, not
// std::uniform_int_distribution, whose output is implementation-defined.
// Same (family, params, seed) gives a byte-identical instance everywhere.

using Rng = std::mt19937_64;

/// Unbiased integer in [0, bound) by rejection. Requires bound > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

enum class Family { Path, Cycle, Star, Spider, Grid, RandomMinDegree, Interval, KTreeChordal };

std::string to_string(Family f);

struct Interval {
    std::int64_t left;
    std::int64_t right;
};

struct GeneratedInstance {
    Graph graph;
    std::optional<Decomposition> decomposition;
    Family family = Family::Path;
    std::vector<std::uint64_t> params;
    std::uint64_t seed = 0;

    // Recorded at generation time; tests recompute and compare.
    std::size_t min_degree = 0;
    Distance diameter = 0;
    std::optional<Distance> decomposition_length;

    /// Interval family only: the interval of each kept vertex.
    std::vector<Interval> intervals;
};

/// P_n with bags {i, i+1} (a single bag {0} when n = 1).
GeneratedInstance gen_path(std::size_t n);
/// C_n (n >= 3) with path bags {0, i, i+1}.
GeneratedInstance gen_cycle(std::size_t n);
/// K_{1,leaves}: center 0, leaves 1..leaves, bags {0, i} hung off bag {0, 1}.
GeneratedInstance gen_star(std::size_t leaves);
/// Center 0 with `legs` paths of `leg_length` vertices; one bag per edge.
GeneratedInstance gen_spider(std::size_t legs, std::size_t leg_length);
/// rows x cols grid with the column-pair path decomposition.
GeneratedInstance gen_grid(std::size_t rows, std::size_t cols);

/// Connected graph with minimum degree >= delta: a random spanning tree, then
/// each deficient vertex (ascending id) gains random new neighbours. No
/// decomposition. Requires delta < n.
GeneratedInstance gen_random_min_degree(std::size_t n, std::size_t delta, std::uint64_t seed);

/// n random closed intervals with integer endpoints in [0, max_coord]; keeps
/// the largest connected component of the intersection graph and attaches
/// the sweep path decomposition (one bag per distinct left endpoint holding
/// every interval that contains it).
GeneratedInstance gen_interval(std::size_t n, std::uint64_t max_coord, std::uint64_t seed);

/// Same construction from explicit intervals.
GeneratedInstance interval_instance(const std::vector<Interval>& intervals);

/// Random k-tree on n > k >= 1 vertices with its clique tree (length 1).
GeneratedInstance gen_ktree_chordal(std::size_t n, std::size_t k, std::uint64_t seed);

} // namespace burn
