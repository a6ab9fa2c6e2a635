#pragma once

#include "burn/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace burn {

using Round = std::uint32_t;

/// Ordered activators: entry i-1 is ignited in round i.
struct BurningSchedule {
    std::vector<Vertex> activators;

    std::size_t size() const { return activators.size(); }
    bool empty() const { return activators.empty(); }

    /// Some vertex appears more than once. Legal, but the repeat is wasted.
    bool has_duplicates() const;

    friend bool operator==(const BurningSchedule&, const BurningSchedule&) = default;
};

struct BurnReport {
    /// Round in which fire reaches each vertex; nullopt if it never does.
    std::vector<std::optional<Round>> burn_round;
    /// Latest burn round over burned vertices.
    Round completion_round = 0;
    bool complete = false;
    /// Activators that were already burning when their round came.
    std::size_t wasted_activations = 0;
};

/// Runs the burning process: activator i ignites in round i (if not already
/// burning) and every fire spreads one hop per round. Rounds continue after
/// the last activator until the fire stops spreading.
///
/// Throws InputError for an empty schedule on a nonempty graph or for an
/// activator id outside the graph.
BurnReport simulate(const Graph& g, const BurningSchedule& s);

/// True iff len(s) <= k and every vertex burns by round k.
bool verify(const Graph& g, const BurningSchedule& s, Round k);

/// ceil(sqrt(d + 1)): no schedule burns a graph of diameter d faster.
Round lower_bound_diameter(Distance d);

/// Appends lowest-id activators that would still be unburned in the next
/// round, until the schedule completes no later than its own length (or no
/// activator can help). Never increases the completion round.
BurningSchedule pad_with_unburned(const Graph& g, BurningSchedule s);

enum class ExactStatus { Solved, BudgetExceeded };

struct ExactResult {
    ExactStatus status = ExactStatus::Solved;
    Round rounds = 0;
    BurningSchedule schedule;
};

/// Smallest k with a schedule that burns g within k rounds, together with
/// the lexicographically first witness of length k.
///
/// Cost grows as n^k; meant for small graphs. If `max_rounds` is given and
/// no schedule of length <= max_rounds exists, the status is BudgetExceeded.
/// Throws PreconditionError for disconnected or empty graphs.
ExactResult exact_burning_number(const Graph& g, std::optional<Round> max_rounds = std::nullopt);

} // namespace burn
