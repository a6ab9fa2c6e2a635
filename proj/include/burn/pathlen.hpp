#pragma once

#include "burn/burning.hpp"
#include "burn/decomposition.hpp"
#include "burn/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace burn {

struct PathPlacement {
    std::size_t position;
    Round round;

    friend bool operator==(const PathPlacement&, const PathPlacement&) = default;
};

/// Activator layout burning a standalone path of `vertex_count` vertices in
/// k = ceil(sqrt(vertex_count)) rounds. The round-i activator owns a
/// segment of 2(k-i)+1 positions, segments laid left to right, and sits in
/// the middle of its segment; positions past the end clamp to the last one.
std::vector<PathPlacement> path_burn_schedule(std::size_t vertex_count);

/// Drops end bags contained in their neighbour until both end bags own a
/// private vertex or a single bag is left. The result is canonical: bags in
/// path order, rooted at bag 0. Throws PreconditionError if `t` is not a
/// path decomposition.
Decomposition normalize_path_decomposition(const Graph& g, const Decomposition& t);

struct SpinePlan {
    Vertex x = 0, y = 0;              // private vertices of the two end bags
    Vertex x_prime = 0, y_prime = 0;  // their neighbours on one shortest x-y path
    std::vector<Vertex> spine;        // shortest x'-y' path
    BurningSchedule spine_schedule;
    Round total_bound = 0;            // ceil(sqrt(d-1)) + pl
};

struct PathlenResult {
    enum class Mode { Spine, SingleBag, ExactFallback };
    Mode mode = Mode::Spine;
    BurningSchedule schedule;
    /// Completion round the schedule is guaranteed not to exceed.
    Round certified_bound = 0;
    Distance path_length = 0;
    Distance diameter = 0;
    std::optional<SpinePlan> spine;
};

/// Burns g using a path decomposition: burn a diametral spine with the path
/// layout, then every bag holds a burning vertex and the rest of the graph
/// burns within pl more rounds. Graphs of diameter < 2 are solved exactly.
///
/// Throws PreconditionError if g is disconnected or `t` is not a valid path
/// decomposition of g.
PathlenResult burn_pathlen(const Graph& g, const Decomposition& t);

struct GridInstance {
    Graph graph;
    Decomposition decomposition;
};

/// rows x cols grid (vertex r*cols + c) with the path decomposition whose
/// i-th bag holds columns i and i+1. Requires 1 <= rows <= cols, cols >= 2.
GridInstance grid_decomposition(std::size_t rows, std::size_t cols);

} // namespace burn
