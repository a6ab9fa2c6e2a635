#pragma once

#include "burn/burning.hpp"
#include "burn/decomposition.hpp"
#include "burn/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace burn {

/// One marking iteration of the guess procedure.
struct GuessIteration {
    std::size_t index = 0;         // i, 1-based
    Vertex terminal = 0;           // farthest unmarked vertex from the origin
    BagIndex terminal_bag = 0;     // shallowest bag holding the terminal
    BagIndex activator_bag = 0;    // first ancestor with no vertex within guess-1 of it (or the root)
    Vertex activator = 0;          // lowest-id vertex of activator_bag
    Distance activator_terminal_distance = 0;
    std::uint64_t marking_radius = 0;  // (2g - i + 1) + 4 tl
    std::size_t marked_count = 0;      // total marked after this iteration
};

struct GuessOutcome {
    /// Set iff every vertex got marked within guess + 1 iterations.
    std::optional<BurningSchedule> schedule;
    std::vector<GuessIteration> trace;
    BagIndex root = 0;
    Vertex origin = 0;

    bool has_schedule() const { return schedule.has_value(); }
};

struct GuessOptions {
    /// Root bag for the procedure; the decomposition is re-rooted there.
    BagIndex root = 0;
};

/// Runs the guess procedure for `guess` >= 1 on a tree decomposition of
/// length at most `tl`.
///
/// A returned schedule burns g within 2*guess + 4*tl + 1 rounds; no schedule
/// means g cannot be burned in fewer than `guess` rounds. Ties are broken by
/// lowest vertex id / bag index. Throws PreconditionError on a disconnected
/// graph, an invalid decomposition, an empty bag, or tl below the
/// decomposition's length; InputError if guess is 0.
GuessOutcome burn_guess(const Graph& g, const Decomposition& t, Distance tl, Round guess,
                        const GuessOptions& options = {});

enum class GuessSearch { Linear, Binary };

struct TreelenResult {
    Round g_star = 0;
    BurningSchedule schedule;
    GuessOutcome outcome;   // the run at g_star
    Distance tree_length = 0;
    Round upper = 0;        // 2 g* + 4 tl + 1
    Round lower = 0;        // g*
    /// max(1, g* - 1): what a failed guess at g* - 1 rules out on its own.
    Round proven_lower = 0;
    double ratio_bound = 0; // (2 g* + 4 tl + 1) / g*
    /// Binary search was requested but the cross-check failed.
    bool fell_back_to_linear = false;
};

/// Smallest guess in [1, max(d, 1)] for which burn_guess returns a schedule.
/// tl is computed from the decomposition. Binary search assumes success is
/// monotone in the guess and verifies that g* - 1 fails; if not, it falls
/// back to the linear scan.
TreelenResult search_g_star(const Graph& g, const Decomposition& t,
                            GuessSearch mode = GuessSearch::Linear,
                            const GuessOptions& options = {});

/// One line per iteration, for --trace output.
std::string format_trace(const GuessOutcome& outcome);

} // namespace burn
