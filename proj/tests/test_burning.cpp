#include "burn/burning.hpp"
#include "burn/errors.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace burn;

namespace {

BurningSchedule sched(std::vector<Vertex> a) { return BurningSchedule{std::move(a)}; }

std::vector<Round> rounds_of(const BurnReport& r) {
    std::vector<Round> out;
    for (const auto& x : r.burn_round) out.push_back(x.value_or(0));
    return out;
}

} // namespace

TEST(Simulate, SingleVertex) {
    const auto r = simulate(Graph(1), sched({0}));
    EXPECT_TRUE(r.complete);
    EXPECT_EQ(r.completion_round, 1u);
}

TEST(Simulate, P4TwoActivators) {
    const auto r = simulate(oracle::path_graph(4), sched({1, 3}));
    EXPECT_EQ(rounds_of(r), (std::vector<Round>{2, 1, 2, 2}));
    EXPECT_EQ(r.completion_round, 2u);
    EXPECT_TRUE(r.complete);
}

TEST(Simulate, StarFromCenterTakesTwoRounds) {
    const auto r = simulate(oracle::star_graph(5), sched({0}));
    EXPECT_EQ(r.completion_round, 2u);
}

TEST(Simulate, WastedActivationIsCounted) {
    // Vertex 1 is already burning in round 2.
    const auto r = simulate(oracle::path_graph(3), sched({0, 1}));
    EXPECT_EQ(r.wasted_activations, 1u);
    EXPECT_EQ(r.completion_round, 3u);
    EXPECT_TRUE(sched({0, 1, 0}).has_duplicates());
    EXPECT_FALSE(sched({0, 1}).has_duplicates());
}

TEST(Simulate, DisconnectedPartStaysUnburned) {
    const std::vector<Edge> e{{0, 1}};
    const auto r = simulate(Graph::from_edges(3, e), sched({0}));
    EXPECT_FALSE(r.complete);
    EXPECT_FALSE(r.burn_round[2].has_value());
}

TEST(Simulate, RejectsBadSchedules) {
    EXPECT_THROW(simulate(oracle::path_graph(3), sched({})), InputError);
    EXPECT_THROW(simulate(oracle::path_graph(3), sched({3})), InputError);
}

TEST(Simulate, ClosedFormAndActivatorInvariant) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = oracle::random_connected_graph(2 + trial % 15, 0.12, rng);
        const auto fw = oracle::floyd_warshall(g);
        std::vector<Vertex> a(1 + rng() % 5);
        for (auto& v : a) v = static_cast<Vertex>(rng() % g.size());
        const auto r = simulate(g, sched(a));
        Round worst = 0;
        for (Vertex v = 0; v < g.size(); ++v) {
            std::int64_t best = oracle::kInf;
            for (std::size_t i = 0; i < a.size(); ++i)
                best = std::min<std::int64_t>(best, static_cast<std::int64_t>(i + 1) + fw[a[i]][v]);
            EXPECT_EQ(static_cast<std::int64_t>(*r.burn_round[v]), best);
            worst = std::max<Round>(worst, static_cast<Round>(best));
        }
        EXPECT_EQ(r.completion_round, worst);
        for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LE(*r.burn_round[a[i]], i + 1);
    }
}

TEST(Simulate, AgreesWithLiteralFrontierOn200Pairs) {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 25;
        const double p = 0.02 + 0.01 * static_cast<double>(rng() % 20);
        const auto g = oracle::random_connected_graph(n, p, rng);
        std::vector<Vertex> a(1 + rng() % 8);
        for (auto& v : a) v = static_cast<Vertex>(rng() % n);
        const auto lib = simulate(g, sched(a));
        const auto lit = oracle::literal_burn(g, a);
        ASSERT_EQ(lib.complete, lit.complete);
        EXPECT_EQ(rounds_of(lib), lit.round) << "trial " << trial;
        EXPECT_EQ(lib.completion_round, lit.completion);
    }
}

TEST(Verify, Examples) {
    // Classic layout on P_9: segments 5, 3, 1.
    EXPECT_TRUE(verify(oracle::path_graph(9), sched({2, 6, 8}), 3));
    EXPECT_FALSE(verify(oracle::complete_graph(5), sched({0}), 1));
    EXPECT_TRUE(verify(oracle::complete_graph(5), sched({0}), 2));
    // Length above k fails even if coverage is early.
    EXPECT_FALSE(verify(oracle::complete_graph(5), sched({0, 1, 2}), 2));
}

TEST(Verify, AllVerticesWithinN) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = oracle::random_connected_graph(1 + trial, 0.1, rng);
        std::vector<Vertex> a(g.size());
        std::iota(a.begin(), a.end(), 0);
        std::shuffle(a.begin(), a.end(), rng);
        EXPECT_TRUE(verify(g, sched(a), static_cast<Round>(g.size())));
    }
}

TEST(Verify, MonotoneInRoundsAndPrefixDominance) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = oracle::random_connected_graph(3 + trial % 18, 0.1, rng);
        std::vector<Vertex> a(1 + rng() % 5);
        for (auto& v : a) v = static_cast<Vertex>(rng() % g.size());
        for (Round k = 1; k < 25; ++k) {
            if (verify(g, sched(a), k)) EXPECT_TRUE(verify(g, sched(a), k + 1));
        }
        const auto before = simulate(g, sched(a)).completion_round;
        a.push_back(static_cast<Vertex>(rng() % g.size()));
        EXPECT_LE(simulate(g, sched(a)).completion_round, before);
    }
}

TEST(LowerBound, DiameterFormula) {
    EXPECT_EQ(lower_bound_diameter(8), 3u);
    EXPECT_EQ(lower_bound_diameter(0), 1u);
    EXPECT_EQ(lower_bound_diameter(3), 2u);
    EXPECT_EQ(lower_bound_diameter(9), 4u);
    for (Distance d = 0; d < 500; ++d) {
        const Round k = lower_bound_diameter(d);
        EXPECT_GE(std::uint64_t{k} * k, d + 1u);
        EXPECT_LT(std::uint64_t{k - 1} * (k - 1), d + 1u);
    }
}

TEST(Padding, NeverWorsensAndFinishesWithinLength) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = oracle::random_connected_graph(2 + trial % 20, 0.08, rng);
        std::vector<Vertex> a(1 + rng() % 3);
        for (auto& v : a) v = static_cast<Vertex>(rng() % g.size());
        const auto before = simulate(g, sched(a));
        const auto padded = pad_with_unburned(g, sched(a));
        ASSERT_GE(padded.size(), a.size());
        EXPECT_TRUE(std::equal(a.begin(), a.end(), padded.activators.begin()));
        const auto after = simulate(g, padded);
        EXPECT_TRUE(after.complete);
        EXPECT_LE(after.completion_round, before.completion_round);
        EXPECT_LE(after.completion_round, std::max<Round>(static_cast<Round>(padded.size()),
                                                          before.completion_round));
    }
}

TEST(Exact, Examples) {
    EXPECT_EQ(exact_burning_number(oracle::path_graph(9)).rounds, 3u);
    EXPECT_EQ(exact_burning_number(Graph(1)).rounds, 1u);
    EXPECT_EQ(exact_burning_number(oracle::grid_graph(3, 3)).rounds, 3u);
    EXPECT_EQ(exact_burning_number(oracle::complete_graph(6)).rounds, 2u);
    EXPECT_EQ(exact_burning_number(oracle::star_graph(7)).rounds, 2u);
}

TEST(Exact, WitnessVerifiesAndIsLexicographicallyFirst) {
    const auto res = exact_burning_number(oracle::path_graph(4));
    ASSERT_EQ(res.status, ExactStatus::Solved);
    EXPECT_EQ(res.rounds, 2u);
    // Lexicographic scan over length-2 schedules: (0,*) fails, (1,3) is the first hit.
    EXPECT_EQ(res.schedule, sched({1, 3}));
    EXPECT_TRUE(verify(oracle::path_graph(4), res.schedule, 2));
}

TEST(Exact, BudgetExceededIsDistinct) {
    const auto res = exact_burning_number(oracle::path_graph(16), 3);
    EXPECT_EQ(res.status, ExactStatus::BudgetExceeded);
    const auto ok = exact_burning_number(oracle::path_graph(16), 4);
    EXPECT_EQ(ok.status, ExactStatus::Solved);
    EXPECT_EQ(ok.rounds, 4u);
}

TEST(Exact, RejectsDisconnected) {
    const std::vector<Edge> e{{0, 1}};
    EXPECT_THROW(exact_burning_number(Graph::from_edges(3, e)), PreconditionError);
}

TEST(Exact, AgreesWithBruteForceOnTinyGraphs) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 7;
        const auto g = oracle::random_connected_graph(n, 0.05 * (trial % 9), rng);
        const auto res = exact_burning_number(g);
        EXPECT_EQ(res.rounds, oracle::brute_force_burning_number(g)) << "trial " << trial;
        EXPECT_TRUE(verify(g, res.schedule, res.rounds));
        EXPECT_GE(res.rounds, lower_bound_diameter(metrics(g).diameter));
    }
}

TEST(Exact, WitnessIsLexicographicallyFirstAgainstEnumeration) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 3 + trial % 4;
        const auto g = oracle::random_connected_graph(n, 0.2, rng);
        const auto res = exact_burning_number(g);
        std::vector<Vertex> s(res.rounds, 0);
        while (!verify(g, sched(s), res.rounds)) {
            std::size_t i = s.size();
            while (i > 0 && ++s[i - 1] == n) s[--i] = 0;
        }
        EXPECT_EQ(res.schedule, sched(s));
    }
}

TEST(Exact, PathsMatchClosedForm) {
    for (std::size_t n = 1; n <= 16; ++n) {
        EXPECT_EQ(exact_burning_number(oracle::path_graph(n)).rounds, oracle::path_burning_number(n))
            << "n=" << n;
    }
}
