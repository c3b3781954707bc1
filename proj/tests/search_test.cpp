// SPDX-License-Identifier: Apache-2.0

#include <mcs/search.hpp>

#include <mcs/oracle.hpp>

#include "support/test_graphs.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

using namespace mcs;
using mcs::testing::best_extension;
using mcs::testing::complete_graph;
using mcs::testing::path_graph;
using mcs::testing::random_graph;

namespace
{
    auto config_for(PolicyKind policy, bool top_down) -> SolveConfig
    {
        SolveConfig config;
        config.policy = policy;
        config.top_down = top_down;
        return config;
    }

    auto all_configs() -> std::vector<SolveConfig>
    {
        return {
            config_for(PolicyKind::degree, false),
            config_for(PolicyKind::reward_learning, false),
            config_for(PolicyKind::degree, true),
            config_for(PolicyKind::reward_learning, true),
        };
    }

    auto stats_equal_modulo_time(const SearchStats & a, const SearchStats & b) -> bool
    {
        return a.recursive_calls == b.recursive_calls &&
            a.recursive_calls_at_best == b.recursive_calls_at_best &&
            a.pattern_branch_counts == b.pattern_branch_counts &&
            a.target_branch_counts == b.target_branch_counts;
    }
}

TEST(Solve, SelfMatchOnCompleteGraph)
{
    const Graph k3 = complete_graph(3);
    const SolveResult result = solve(k3, k3, {});
    EXPECT_EQ(result.best.size(), 3u);
    EXPECT_TRUE(result.optimum_proved);
    EXPECT_EQ(result.status, SolveStatus::solved);
    EXPECT_TRUE(verify_common_subgraph(k3, k3, result.best));
}

TEST(Solve, PathIntoCompleteGraph)
{
    const Graph p3 = path_graph(3);
    const Graph k3 = complete_graph(3);
    for (const auto & config : all_configs()) {
        const SolveResult result = run_solver(p3, k3, config);
        EXPECT_EQ(result.best.size(), 2u);
        EXPECT_TRUE(result.optimum_proved);
        EXPECT_TRUE(verify_common_subgraph(p3, k3, result.best));
    }
}

TEST(Solve, NoCommonLabelMeansEmptySolution)
{
    const Graph pattern{1, false, {}, std::vector<int>{5}};
    const Graph target{2, false, {}, std::vector<int>{0, 0}};
    const SolveResult result = solve(pattern, target, {});
    EXPECT_EQ(result.best.size(), 0u);
    EXPECT_TRUE(result.optimum_proved);
    EXPECT_EQ(result.stats.time_opt, 0.0);
}

TEST(Solve, EmptyPatternInstance)
{
    const Graph empty{0, false, {}};
    const SolveResult result = solve(empty, complete_graph(3), {});
    EXPECT_EQ(result.best.size(), 0u);
    EXPECT_TRUE(result.optimum_proved);
    EXPECT_EQ(result.stats.time_opt, 0.0);
    EXPECT_EQ(result.stats.recursive_calls, 1u);
}

TEST(Solve, RejectsMismatchedDriverFlag)
{
    const Graph k2 = complete_graph(2);
    EXPECT_THROW((void) solve(k2, k2, config_for(PolicyKind::degree, true)), std::invalid_argument);
    EXPECT_THROW((void) solve_top_down(k2, k2, config_for(PolicyKind::degree, false)),
        std::invalid_argument);
    SolveConfig bad;
    bad.timeout_seconds = 0.0;
    EXPECT_THROW((void) solve(k2, k2, bad), std::invalid_argument);
}

TEST(SolveTopDown, IdentitySucceedsAtMaximalCardinality)
{
    std::mt19937 rng{5};
    const Graph g = random_graph(rng, 7, 450, false);
    const SolveResult result = solve_top_down(g, g, config_for(PolicyKind::degree, true));
    EXPECT_EQ(result.best.size(), 7u);
    EXPECT_TRUE(result.optimum_proved);
}

TEST(SolveTopDown, DisjointLabelsDescendToZero)
{
    const Graph pattern{2, false, {}, std::vector<int>{1, 1}};
    const Graph target{2, false, {}, std::vector<int>{2, 2}};
    const SolveResult result = solve_top_down(pattern, target, config_for(PolicyKind::degree, true));
    EXPECT_EQ(result.best.size(), 0u);
    EXPECT_TRUE(result.optimum_proved);
}

TEST(SolveTopDown, AgreesWithBottomUp)
{
    std::mt19937 rng{9};
    for (int round = 0; round < 30; ++round) {
        const bool directed = (round & 1) != 0;
        const Graph pattern = random_graph(rng, 3 + static_cast<int>(rng() % 5), 400, directed);
        const Graph target = random_graph(rng, 3 + static_cast<int>(rng() % 5), 400, directed);
        const auto bottom_up = solve(pattern, target, config_for(PolicyKind::degree, false));
        const auto top_down = solve_top_down(pattern, target, config_for(PolicyKind::degree, true));
        EXPECT_EQ(bottom_up.best.size(), top_down.best.size());
        EXPECT_TRUE(verify_common_subgraph(pattern, target, top_down.best));
    }
}

TEST(Solve, MatchesOracleUnderAllConfigs)
{
    std::mt19937 rng{13};
    for (int round = 0; round < 60; ++round) {
        const bool directed = (round & 1) != 0;
        const int label_count = (round & 2) != 0 ? 2 : 1;
        const int permille = (round % 3 == 0) ? 200 : (round % 3 == 1) ? 500 : 800;
        const Graph pattern = random_graph(rng, 2 + static_cast<int>(rng() % 7), permille, directed,
            label_count);
        const Graph target = random_graph(rng, 2 + static_cast<int>(rng() % 7), permille, directed,
            label_count);

        const OracleResult expected = brute_force_mcs(pattern, target);
        std::size_t degree_size = 0;
        bool first = true;
        for (const auto & config : all_configs()) {
            const SolveResult result = run_solver(pattern, target, config);
            ASSERT_TRUE(result.optimum_proved);
            EXPECT_EQ(result.best.size(), static_cast<std::size_t>(expected.size));
            EXPECT_TRUE(verify_common_subgraph(pattern, target, result.best));
            if (first) {
                degree_size = result.best.size();
                first = false;
            }
            else {
                EXPECT_EQ(result.best.size(), degree_size);  // policy invariance
            }
        }
    }
}

TEST(Solve, PruningDisabledGivesSameOptimum)
{
    std::mt19937 rng{15};
    for (int round = 0; round < 15; ++round) {
        const Graph pattern = random_graph(rng, 2 + static_cast<int>(rng() % 5), 500, false);
        const Graph target = random_graph(rng, 2 + static_cast<int>(rng() % 5), 500, false);
        SolveConfig exhaustive;
        exhaustive.disable_pruning = true;
        const auto pruned = solve(pattern, target, {});
        const auto full = solve(pattern, target, exhaustive);
        EXPECT_EQ(pruned.best.size(), full.best.size());
        EXPECT_GE(full.stats.recursive_calls, pruned.stats.recursive_calls);
    }
}

TEST(Solve, IncumbentsAreMonotone)
{
    std::mt19937 rng{19};
    const Graph pattern = random_graph(rng, 8, 500, false);
    const Graph target = random_graph(rng, 8, 500, false);

    std::vector<int> sizes;
    SolveConfig config;
    config.on_incumbent = [&](int size, double) { sizes.push_back(size); };
    const SolveResult result = solve(pattern, target, config);

    ASSERT_FALSE(sizes.empty());
    for (std::size_t i = 1; i < sizes.size(); ++i)
        EXPECT_GT(sizes[i], sizes[i - 1]);
    EXPECT_EQ(static_cast<std::size_t>(sizes.back()), result.best.size());
}

TEST(Solve, AnytimeBehaviourUnderNodeLimit)
{
    std::mt19937 rng{21};
    const Graph pattern = random_graph(rng, 9, 500, false);
    const Graph target = random_graph(rng, 9, 500, false);

    std::vector<int> sizes;
    SolveConfig config;
    config.node_limit = 40;
    config.on_incumbent = [&](int size, double) { sizes.push_back(size); };
    const SolveResult result = solve(pattern, target, config);

    EXPECT_EQ(result.status, SolveStatus::timeout);
    EXPECT_FALSE(result.optimum_proved);
    EXPECT_TRUE(verify_common_subgraph(pattern, target, result.best));
    for (int size : sizes)
        EXPECT_GE(static_cast<int>(result.best.size()), 0);
    if (!sizes.empty())
        EXPECT_EQ(static_cast<std::size_t>(sizes.back()), result.best.size());
}

TEST(Solve, TimeoutUnwindsCleanly)
{
    std::mt19937 rng{25};
    const Graph pattern = random_graph(rng, 13, 500, false);
    const Graph target = random_graph(rng, 13, 500, false, 1);

    SolveConfig config;
    config.timeout_seconds = 1e-4;
    const SolveResult result = solve(pattern, target, config);
    EXPECT_EQ(result.status, SolveStatus::timeout);
    EXPECT_FALSE(result.optimum_proved);
    EXPECT_TRUE(verify_common_subgraph(pattern, target, result.best));
}

TEST(Solve, NodeLimitBoundsRecursiveCalls)
{
    std::mt19937 rng{27};
    const Graph pattern = random_graph(rng, 10, 500, false);
    const Graph target = random_graph(rng, 10, 500, false);
    SolveConfig config;
    config.node_limit = 10;
    const SolveResult result = solve(pattern, target, config);
    EXPECT_EQ(result.status, SolveStatus::timeout);
    EXPECT_LE(result.stats.recursive_calls, 11u);
}

TEST(Solve, DepthLimitFailsGracefully)
{
    const Graph k4 = complete_graph(4);
    SolveConfig config;
    config.depth_limit = 2;
    EXPECT_THROW((void) solve(k4, k4, config), DepthLimitError);
}

TEST(Solve, DeterministicRuns)
{
    std::mt19937 rng{29};
    for (int round = 0; round < 8; ++round) {
        const Graph pattern = random_graph(rng, 7, 450, round % 2 == 0, 2);
        const Graph target = random_graph(rng, 8, 450, round % 2 == 0, 2);
        for (const auto & config : all_configs()) {
            const SolveResult a = run_solver(pattern, target, config);
            const SolveResult b = run_solver(pattern, target, config);
            EXPECT_EQ(a.best, b.best);
            EXPECT_EQ(a.status, b.status);
            EXPECT_TRUE(stats_equal_modulo_time(a.stats, b.stats));
        }
    }
}

TEST(Solve, StatsAccountEveryTriedMatch)
{
    std::mt19937 rng{31};
    const Graph pattern = random_graph(rng, 7, 500, false);
    const Graph target = random_graph(rng, 7, 500, false);
    for (const auto & config : all_configs()) {
        const SolveResult result = run_solver(pattern, target, config);
        const auto sum = [](const std::vector<std::uint64_t> & xs) {
            return std::accumulate(xs.begin(), xs.end(), std::uint64_t{0});
        };
        EXPECT_EQ(sum(result.stats.pattern_branch_counts), sum(result.stats.target_branch_counts));
        EXPECT_GT(sum(result.stats.pattern_branch_counts), 0u);
        EXPECT_LE(result.stats.time_opt, result.stats.time_total);
        EXPECT_LE(result.stats.recursive_calls_at_best, result.stats.recursive_calls);
    }
}

TEST(Solve, UpperBoundCoversBestCompletionAtEveryNode)
{
    std::mt19937 rng{33};
    for (int round = 0; round < 6; ++round) {
        const Graph pattern = random_graph(rng, 6, 450, false);
        const Graph target = random_graph(rng, 6, 450, false);
        SolveConfig config;
        config.on_node = [&](const Solution & current, const DomainStore & store) {
            EXPECT_GE(bound(store), best_extension(pattern, target, current, store));
        };
        (void) solve(pattern, target, config);
    }
}

TEST(Solve, TinyScoreCapStillSolvesCorrectly)
{
    std::mt19937 rng{35};
    const Graph pattern = random_graph(rng, 7, 500, false);
    const Graph target = random_graph(rng, 7, 500, false);
    SolveConfig config;
    config.policy = PolicyKind::reward_learning;
    config.score_cap = 4;
    const SolveResult capped = solve(pattern, target, config);
    const OracleResult expected = brute_force_mcs(pattern, target);
    EXPECT_EQ(capped.best.size(), static_cast<std::size_t>(expected.size));
}

TEST(BranchingSd, MatchesHandComputations)
{
    const std::vector<std::uint64_t> constant{2, 2, 2};
    EXPECT_DOUBLE_EQ(branching_sd(constant), 0.0);

    const std::vector<std::uint64_t> pair{0, 4};
    EXPECT_DOUBLE_EQ(branching_sd(pair), 2.0);

    const std::vector<std::uint64_t> spread{1, 2, 3, 4};
    EXPECT_NEAR(branching_sd(spread), std::sqrt(1.25), 1e-12);

    EXPECT_THROW((void) branching_sd(std::vector<std::uint64_t>{}), std::invalid_argument);
}
