#include "burn/treelen.hpp"

#include "burn/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace burn {

namespace {

// Checked inputs plus everything that does not depend on the guess.
struct Prepared {
    const Graph& g;
    Decomposition tree;
    Distance tl;
    Vertex origin;
    DistanceOracle from_origin;
    std::vector<BagIndex> shallowest_bag;
};

Prepared prepare(const Graph& g, const Decomposition& t, std::optional<Distance> tl,
                 const GuessOptions& options) {
    if (g.size() == 0) throw PreconditionError("cannot burn the empty graph");
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
    if (auto v = validate(g, t)) throw PreconditionError("invalid decomposition: " + v->message);
    for (const auto& bag : t.bags) {
        if (bag.empty()) throw PreconditionError("decomposition has an empty bag");
    }
    const auto measured = length_of(g, t).length;
    if (tl && *tl < measured) {
        throw PreconditionError("tl=" + std::to_string(*tl) + " is below the decomposition length " +
                                std::to_string(measured));
    }

    auto tree = reroot(t, options.root);
    const auto depth = tree.depth();
    std::vector<BagIndex> shallowest(g.size(), tree.size());
    for (BagIndex b = 0; b < tree.size(); ++b) {
        for (Vertex v : tree.bags[b]) {
            auto& cur = shallowest[v];
            if (cur == tree.size() || depth[b] < depth[cur]) cur = b;
        }
    }
    const Vertex origin = tree.bags[tree.root].front();
    return Prepared{g, std::move(tree), tl.value_or(measured), origin, bfs(g, origin),
                    std::move(shallowest)};
}

GuessOutcome run_guess(const Prepared& p, Round guess) {
    const auto& g = p.g;
    const auto& tree = p.tree;
    const auto n = g.size();

    GuessOutcome out;
    out.root = tree.root;
    out.origin = p.origin;

    std::vector<bool> marked(n, false);
    std::size_t marked_count = 0;
    std::vector<Vertex> activators;

    for (std::size_t i = 1; i <= std::size_t{guess} + 1 && marked_count < n; ++i) {
        GuessIteration it;
        it.index = i;

        // farthest unmarked vertex from the origin, lowest id on ties
        std::optional<Vertex> terminal;
        for (Vertex v = 0; v < n; ++v) {
            if (marked[v]) continue;
            if (!terminal || *p.from_origin[v] > *p.from_origin[*terminal]) terminal = v;
        }
        it.terminal = *terminal;
        it.terminal_bag = p.shallowest_bag[it.terminal];

        const auto from_terminal = bfs(g, it.terminal);
        auto near_terminal = [&](BagIndex b) {
            return std::any_of(tree.bags[b].begin(), tree.bags[b].end(), [&](Vertex v) {
                return *from_terminal[v] + 1 <= guess;
            });
        };
        BagIndex cur = it.terminal_bag;
        while (cur != tree.root && near_terminal(cur)) cur = *tree.parent[cur];
        it.activator_bag = cur;
        it.activator = tree.bags[cur].front();
        it.activator_terminal_distance = *from_terminal[it.activator];

        it.marking_radius = (2 * std::uint64_t{guess} - i + 1) + 4 * std::uint64_t{p.tl};
        const auto from_activator = bfs(g, it.activator);
        for (Vertex v = 0; v < n; ++v) {
            if (!marked[v] && *from_activator[v] <= it.marking_radius) {
                marked[v] = true;
                ++marked_count;
            }
        }
        it.marked_count = marked_count;
        activators.push_back(it.activator);
        out.trace.push_back(it);
    }

    if (marked_count == n) out.schedule = BurningSchedule{std::move(activators)};
    return out;
}

} // namespace

GuessOutcome burn_guess(const Graph& g, const Decomposition& t, Distance tl, Round guess,
                        const GuessOptions& options) {
    if (guess == 0) throw InputError("guess must be a positive integer");
    return run_guess(prepare(g, t, tl, options), guess);
}

TreelenResult search_g_star(const Graph& g, const Decomposition& t, GuessSearch mode,
                            const GuessOptions& options) {
    const auto prepared = prepare(g, t, std::nullopt, options);
    const Round top = std::max<Round>(1, metrics(g).diameter);

    TreelenResult result;
    result.tree_length = prepared.tl;

    auto linear = [&]() -> std::optional<std::pair<Round, GuessOutcome>> {
        for (Round guess = 1; guess <= top; ++guess) {
            auto outcome = run_guess(prepared, guess);
            if (outcome.has_schedule()) return std::pair{guess, std::move(outcome)};
        }
        return std::nullopt;
    };

    std::optional<std::pair<Round, GuessOutcome>> found;
    if (mode == GuessSearch::Binary) {
        Round lo = 1, hi = top;
        auto at_hi = run_guess(prepared, hi);
        if (at_hi.has_schedule()) {
            while (lo < hi) {
                const Round mid = lo + (hi - lo) / 2;
                auto outcome = run_guess(prepared, mid);
                if (outcome.has_schedule()) {
                    hi = mid;
                    at_hi = std::move(outcome);
                } else {
                    lo = mid + 1;
                }
            }
            const bool below_fails = hi == 1 || !run_guess(prepared, hi - 1).has_schedule();
            if (below_fails) {
                found = std::pair{hi, std::move(at_hi)};
            }
        }
        if (!found) {
            result.fell_back_to_linear = true;
            found = linear();
        }
    } else {
        found = linear();
    }

    // At guess = d the first activator's marking radius is at least d.
    if (!found) throw std::logic_error("no guess up to the diameter produced a schedule");

    result.g_star = found->first;
    result.outcome = std::move(found->second);
    result.schedule = *result.outcome.schedule;
    result.upper = 2 * result.g_star + 4 * result.tree_length + 1;
    result.lower = result.g_star;
    result.proven_lower = std::max<Round>(1, result.g_star - 1);
    result.ratio_bound = static_cast<double>(result.upper) / result.g_star;
    return result;
}

std::string format_trace(const GuessOutcome& outcome) {
    std::ostringstream os;
    for (const auto& it : outcome.trace) {
        os << "iter " << it.index << " terminal " << it.terminal << " bag " << it.terminal_bag + 1
           << " activator_bag " << it.activator_bag + 1 << " activator " << it.activator
           << " dist " << it.activator_terminal_distance << " radius " << it.marking_radius
           << " marked " << it.marked_count << '\n';
    }
    return os.str();
}

} // namespace burn
