#include "burn/errors.hpp"
#include "burn/generators.hpp"
#include "burn/treelen.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace burn;

namespace {

std::vector<GeneratedInstance> small_corpus() {
    std::vector<GeneratedInstance> out;
    for (std::size_t n = 1; n <= 12; ++n) out.push_back(gen_path(n));
    for (std::size_t n = 3; n <= 12; n += 3) out.push_back(gen_cycle(n));
    out.push_back(gen_star(5));
    out.push_back(gen_star(9));
    out.push_back(gen_spider(3, 3));
    out.push_back(gen_spider(2, 5));
    out.push_back(gen_grid(3, 4));
    out.push_back(gen_grid(2, 5));
    for (std::uint64_t s = 1; s <= 8; ++s) out.push_back(gen_ktree_chordal(8 + s % 5, 1 + s % 2, s));
    for (std::uint64_t s = 1; s <= 8; ++s) out.push_back(gen_interval(12, 30, s));
    return out;
}

std::vector<GeneratedInstance> larger_corpus() {
    std::vector<GeneratedInstance> out;
    out.push_back(gen_path(50));
    out.push_back(gen_cycle(31));
    out.push_back(gen_spider(4, 7));
    out.push_back(gen_grid(4, 9));
    for (std::uint64_t s = 1; s <= 6; ++s) out.push_back(gen_ktree_chordal(60, 1 + s % 3, s));
    for (std::uint64_t s = 1; s <= 4; ++s) out.push_back(gen_interval(60, 150, s));
    return out;
}

Distance tl_of(const GeneratedInstance& inst) { return length_of(inst.graph, *inst.decomposition).length; }

// Checks every per-run property that follows from the procedure alone.
void check_outcome(const GeneratedInstance& inst, Round guess, const GuessOutcome& out) {
    const auto& g = inst.graph;
    const auto tl = tl_of(inst);
    const auto all = all_pairs(g);
    ASSERT_LE(out.trace.size(), guess + 1u);
    std::vector<bool> marked(g.size(), false);
    for (const auto& it : out.trace) {
        EXPECT_FALSE(marked[it.terminal]) << "terminal picked twice";
        EXPECT_EQ(it.marking_radius, (2ull * guess - it.index + 1) + 4ull * tl);
        EXPECT_EQ(it.activator_terminal_distance, *all[it.activator][it.terminal]);
        // Activator bag vertices are all within g + 2tl - 1 of the terminal.
        for (Vertex v : inst.decomposition->bags[it.activator_bag])
            EXPECT_LE(*all[v][it.terminal] + 1, guess + 2 * tl) << "iteration " << it.index;
        for (Vertex v = 0; v < g.size(); ++v)
            if (*all[it.activator][v] <= it.marking_radius) marked[v] = true;
        EXPECT_TRUE(marked[it.terminal]) << "iteration " << it.index << " misses its terminal";
        EXPECT_EQ(static_cast<std::size_t>(std::count(marked.begin(), marked.end(), true)), it.marked_count);
    }
    // Terminals whose activator is not in the root bag are more than 2g apart.
    std::vector<Vertex> far;
    for (const auto& it : out.trace)
        if (it.activator_bag != out.root) far.push_back(it.terminal);
    for (std::size_t i = 0; i < far.size(); ++i)
        for (std::size_t j = i + 1; j < far.size(); ++j) EXPECT_GT(*all[far[i]][far[j]], 2 * guess);

    if (out.has_schedule()) {
        EXPECT_EQ(std::count(marked.begin(), marked.end(), true), static_cast<long>(g.size()));
        const auto rep = simulate(g, *out.schedule);
        ASSERT_TRUE(rep.complete);
        EXPECT_LE(rep.completion_round, 2 * guess + 4 * tl + 1);
        std::vector<Vertex> acts;
        for (const auto& it : out.trace) acts.push_back(it.activator);
        EXPECT_EQ(out.schedule->activators, acts);
    } else {
        EXPECT_EQ(out.trace.size(), guess + 1u);
        EXPECT_LT(static_cast<std::size_t>(std::count(marked.begin(), marked.end(), true)), g.size());
    }
}

} // namespace

TEST(BurnGuess, SingleVertex) {
    const auto inst = gen_path(1);
    const auto out = burn_guess(inst.graph, *inst.decomposition, 0, 1);
    ASSERT_TRUE(out.has_schedule());
    EXPECT_EQ(out.schedule->activators, (std::vector<Vertex>{0}));
}

TEST(BurnGuess, FirstMarkingRadiusIsEightAtGuessTwoLengthOne) {
    const auto inst = gen_ktree_chordal(20, 2, 3);
    ASSERT_EQ(tl_of(inst), 1u);
    const auto out = burn_guess(inst.graph, *inst.decomposition, 1, 2);
    ASSERT_FALSE(out.trace.empty());
    EXPECT_EQ(out.trace[0].marking_radius, 8u);
}

TEST(BurnGuess, P25AtGuessOneHasNoSchedule) {
    const auto inst = gen_path(25);
    const auto out = burn_guess(inst.graph, *inst.decomposition, 1, 1);
    EXPECT_FALSE(out.has_schedule());
    EXPECT_EQ(out.trace.size(), 2u);
    EXPECT_EQ(oracle::path_burning_number(25), 5u);
}

TEST(BurnGuess, OriginAndTerminalTieBreaks) {
    // P_5 rooted at bag {0,1}: origin 0, first terminal is the far end.
    const auto inst = gen_path(5);
    const auto out = burn_guess(inst.graph, *inst.decomposition, 1, 1);
    EXPECT_EQ(out.origin, 0u);
    EXPECT_EQ(out.root, 0u);
    ASSERT_FALSE(out.trace.empty());
    EXPECT_EQ(out.trace[0].terminal, 4u);
    EXPECT_EQ(out.trace[0].terminal_bag, 3u);
}

TEST(BurnGuess, RootOverride) {
    const auto inst = gen_path(9);
    GuessOptions opt;
    opt.root = 7;
    const auto out = burn_guess(inst.graph, *inst.decomposition, 1, 2, opt);
    EXPECT_EQ(out.root, 7u);
    EXPECT_EQ(out.origin, 7u);
    EXPECT_EQ(out.trace[0].terminal, 0u);
}

TEST(BurnGuess, Errors) {
    const auto inst = gen_path(6);
    EXPECT_THROW(burn_guess(inst.graph, *inst.decomposition, 1, 0), InputError);
    EXPECT_THROW(burn_guess(inst.graph, *inst.decomposition, 0, 1), PreconditionError);
    EXPECT_THROW(burn_guess(inst.graph, Decomposition::path({{0, 1}, {3, 4, 5}}), 3, 1), PreconditionError);
    auto with_empty = *inst.decomposition;
    with_empty.bags.push_back({});
    with_empty.parent.push_back(0);
    EXPECT_THROW(burn_guess(inst.graph, with_empty, 1, 1), PreconditionError);
    const std::vector<Edge> e{{0, 1}};
    EXPECT_THROW(burn_guess(Graph::from_edges(3, e), Decomposition::path({{0, 1}, {2}}), 1, 1),
                 PreconditionError);
}

TEST(BurnGuess, TraceInvariantsOnEveryGuessAndRoot) {
    for (const auto& inst : small_corpus()) {
        const auto tl = tl_of(inst);
        const auto d = metrics(inst.graph).diameter;
        for (BagIndex root = 0; root < inst.decomposition->size(); root += 2) {
            GuessOptions opt;
            opt.root = root;
            for (Round g = 1; g <= std::max<Distance>(d, 1) + 1; ++g) {
                SCOPED_TRACE(to_string(inst.family) + " n=" + std::to_string(inst.graph.size()) +
                             " root=" + std::to_string(root) + " g=" + std::to_string(g));
                check_outcome(inst, g, burn_guess(inst.graph, *inst.decomposition, tl, g, opt));
            }
        }
    }
}

TEST(BurnGuess, TraceInvariantsOnLargerInstances) {
    for (const auto& inst : larger_corpus()) {
        const auto tl = tl_of(inst);
        const auto d = metrics(inst.graph).diameter;
        for (Round g = 1; g <= d; ++g) {
            SCOPED_TRACE(to_string(inst.family) + " g=" + std::to_string(g));
            check_outcome(inst, g, burn_guess(inst.graph, *inst.decomposition, tl, g));
        }
    }
}

TEST(BurnGuess, NoScheduleImpliesBurningNumberAtLeastGuess) {
    for (const auto& inst : small_corpus()) {
        const auto bn = exact_burning_number(inst.graph).rounds;
        const auto tl = tl_of(inst);
        const auto d = metrics(inst.graph).diameter;
        for (Round g = 1; g <= std::max<Distance>(d, 1); ++g) {
            if (!burn_guess(inst.graph, *inst.decomposition, tl, g).has_schedule()) {
                EXPECT_GE(bn, g) << to_string(inst.family) << " n=" << inst.graph.size();
            }
        }
    }
}

TEST(SearchGStar, StarK19) {
    const auto inst = gen_star(9);
    const auto res = search_g_star(inst.graph, *inst.decomposition);
    EXPECT_EQ(res.tree_length, 1u);
    EXPECT_EQ(res.g_star, 1u);
    EXPECT_EQ(res.upper, 7u);
    EXPECT_EQ(res.lower, 1u);
    EXPECT_EQ(res.proven_lower, 1u);
    EXPECT_EQ(exact_burning_number(inst.graph).rounds, 2u);
}

TEST(SearchGStar, P50Bracket) {
    const auto inst = gen_path(50);
    const auto res = search_g_star(inst.graph, *inst.decomposition);
    EXPECT_EQ(res.upper, 2 * res.g_star + 5);
    EXPECT_EQ(res.lower, res.g_star);
    EXPECT_LE(res.upper, 2 * res.g_star + 5);
    EXPECT_LE(res.lower, oracle::path_burning_number(50));
    EXPECT_GE(res.upper, oracle::path_burning_number(50));
    EXPECT_LE(simulate(inst.graph, res.schedule).completion_round, res.upper);
}

TEST(SearchGStar, ChordalRatioExpression) {
    for (std::uint64_t s = 1; s <= 5; ++s) {
        const auto inst = gen_ktree_chordal(40, 2, s);
        const auto res = search_g_star(inst.graph, *inst.decomposition);
        ASSERT_EQ(res.tree_length, 1u);
        EXPECT_DOUBLE_EQ(res.ratio_bound, 2.0 + 5.0 / res.g_star);
        EXPECT_DOUBLE_EQ(res.ratio_bound, static_cast<double>(res.upper) / res.g_star);
    }
}

TEST(SearchGStar, SmallestSuccessfulGuessAndCertificate) {
    for (const auto& inst : small_corpus()) {
        const auto res = search_g_star(inst.graph, *inst.decomposition);
        const auto tl = tl_of(inst);
        for (Round g = 1; g < res.g_star; ++g)
            EXPECT_FALSE(burn_guess(inst.graph, *inst.decomposition, tl, g).has_schedule());
        EXPECT_TRUE(res.outcome.has_schedule());
        EXPECT_EQ(res.schedule, *res.outcome.schedule);
        EXPECT_EQ(res.proven_lower, std::max<Round>(1, res.g_star - 1));
        EXPECT_EQ(res.upper, 2 * res.g_star + 4 * tl + 1);
        EXPECT_LE(simulate(inst.graph, res.schedule).completion_round, res.upper);
    }
}

TEST(SearchGStar, BinaryModeAgreesWithLinear) {
    auto all = small_corpus();
    for (auto& inst : larger_corpus()) all.push_back(std::move(inst));
    for (const auto& inst : all) {
        const auto lin = search_g_star(inst.graph, *inst.decomposition, GuessSearch::Linear);
        const auto bin = search_g_star(inst.graph, *inst.decomposition, GuessSearch::Binary);
        EXPECT_EQ(lin.g_star, bin.g_star);
        EXPECT_EQ(lin.schedule, bin.schedule);
        EXPECT_FALSE(lin.fell_back_to_linear);
    }
}

TEST(FormatTrace, OneLinePerIteration) {
    const auto inst = gen_path(25);
    const auto out = burn_guess(inst.graph, *inst.decomposition, 1, 3);
    const auto text = format_trace(out);
    std::istringstream is(text);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(is, line)) {
        EXPECT_EQ(line.rfind("iter ", 0), 0u) << line;
        ++lines;
    }
    EXPECT_EQ(lines, out.trace.size());
}
