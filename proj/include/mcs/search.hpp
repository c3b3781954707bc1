// SPDX-License-Identifier: Apache-2.0

#ifndef MCS_SEARCH_HPP
#define MCS_SEARCH_HPP

#include <mcs/domain_store.hpp>
#include <mcs/graph.hpp>
#include <mcs/policy.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcs
{
    enum class SolveStatus
    {
        solved,
        timeout
    };

    struct SolveConfig
    {
        PolicyKind policy = PolicyKind::degree;
        bool top_down = false;
        double timeout_seconds = 1800.0;
        std::optional<std::uint64_t> node_limit;
        std::int64_t score_cap = default_score_cap;

        // Recursion depth cap; defaults to the structural bound
        // |V_p| + min(|V_p|, |V_t|) + 1, which the search cannot exceed.
        // Hitting the cap raises DepthLimitError rather than overflowing the
        // stack.
        std::optional<int> depth_limit;

        // Test instrumentation. disable_pruning turns off the incumbent test
        // of the bottom-up driver (exhaustive mode); the hooks observe
        // incumbent improvements and node states.
        bool disable_pruning = false;
        std::function<void(int size, double seconds)> on_incumbent;
        std::function<void(const Solution &, const DomainStore &)> on_node;
    };

    struct SearchStats
    {
        std::uint64_t recursive_calls = 0;
        // Value of recursive_calls when the final incumbent was first
        // recorded; a deterministic companion to time_opt.
        std::uint64_t recursive_calls_at_best = 0;
        double time_total = 0.0;
        double time_opt = 0.0;
        std::vector<std::uint64_t> pattern_branch_counts;
        std::vector<std::uint64_t> target_branch_counts;
    };

    struct SolveResult
    {
        SolveStatus status = SolveStatus::solved;
        Solution best;
        bool optimum_proved = false;
        SearchStats stats;
    };

    class DepthLimitError : public std::runtime_error
    {
    public:
        explicit DepthLimitError(int limit) :
            std::runtime_error{"search depth limit of " + std::to_string(limit) + " exceeded"}
        {
        }
    };

    // Population standard deviation (divide by N) of per-vertex branching
    // counts; vertices never branched on contribute zeros.
    inline auto branching_sd(std::span<const std::uint64_t> counts) -> double
    {
        if (counts.empty())
            throw std::invalid_argument{"branching_sd requires a non-empty count sequence"};
        double mean = 0.0;
        for (auto c : counts)
            mean += static_cast<double>(c);
        mean /= static_cast<double>(counts.size());
        double variance = 0.0;
        for (auto c : counts) {
            const double d = static_cast<double>(c) - mean;
            variance += d * d;
        }
        return std::sqrt(variance / static_cast<double>(counts.size()));
    }

    namespace detail
    {
        class Searcher
        {
        public:
            Searcher(const Graph & pattern, const Graph & target, const SolveConfig & config) :
                pattern_(pattern),
                target_(target),
                config_(config),
                start_(std::chrono::steady_clock::now())
            {
                if (config_.timeout_seconds <= 0.0)
                    throw std::invalid_argument{"timeout must be positive"};
                if (config_.policy == PolicyKind::reward_learning)
                    scores_ = ScoreTable{pattern_.size(), target_.size()};
                stats_.pattern_branch_counts.assign(static_cast<std::size_t>(pattern_.size()), 0);
                stats_.target_branch_counts.assign(static_cast<std::size_t>(target_.size()), 0);
                depth_limit_ = config_.depth_limit.value_or(structural_depth_bound());
            }

            auto structural_depth_bound() const -> int
            {
                return pattern_.size() + std::min(pattern_.size(), target_.size()) + 1;
            }

            auto run_bottom_up() -> SolveResult
            {
                goal_ = 0;
                recurse(initial_classes(pattern_, target_), std::numeric_limits<int>::max(), 1);
                return finish();
            }

            auto run_top_down() -> SolveResult
            {
                const int k_max = std::min(pattern_.size(), target_.size());
                for (int k = k_max; k >= 1; --k) {
                    if (static_cast<int>(best_.size()) >= k)
                        break;  // required cardinality already in hand
                    goal_ = k;
                    found_goal_ = false;
                    recurse(initial_classes(pattern_, target_), std::numeric_limits<int>::max(), 1);
                    if (out_of_budget_ || found_goal_)
                        break;
                }
                return finish();
            }

        private:
            auto elapsed_seconds() const -> double
            {
                return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
            }

            auto budget_exhausted() -> bool
            {
                if (config_.node_limit && stats_.recursive_calls > *config_.node_limit)
                    return true;
                return elapsed_seconds() > config_.timeout_seconds;
            }

            auto record_incumbent_if_better() -> void
            {
                if (current_.size() > best_.size()) {
                    best_ = current_;
                    stats_.time_opt = elapsed_seconds();
                    stats_.recursive_calls_at_best = stats_.recursive_calls;
                    if (config_.on_incumbent)
                        config_.on_incumbent(static_cast<int>(best_.size()), stats_.time_opt);
                }
            }

            auto recurse(const DomainStore & store, int parent_upper_bound, int depth) -> void
            {
                ++stats_.recursive_calls;
                if (budget_exhausted()) {
                    out_of_budget_ = true;
                    return;
                }
                if (depth > depth_limit_)
                    throw DepthLimitError{depth_limit_};
                if (config_.on_node)
                    config_.on_node(current_, store);

                const int upper_bound = static_cast<int>(current_.size()) + bound(store);
                if (upper_bound > parent_upper_bound)
                    throw std::logic_error{"upper bound rose from " + std::to_string(parent_upper_bound) +
                        " to " + std::to_string(upper_bound) + " between parent and child"};

                if (goal_ > 0 && static_cast<int>(current_.size()) >= goal_) {
                    record_incumbent_if_better();
                    found_goal_ = true;
                    return;
                }

                if (store.empty()) {
                    record_incumbent_if_better();
                    return;
                }

                if (goal_ > 0) {
                    if (upper_bound < goal_)
                        return;
                }
                else if (!config_.disable_pruning && upper_bound <= static_cast<int>(best_.size())) {
                    return;
                }

                const LabelClass * cls = select_class(store);
                const int v = select_pattern_vertex(*cls, config_.policy, scores_, pattern_);
                const int bound_before = upper_bound - static_cast<int>(current_.size());

                for (int w : order_target_vertices(*cls, config_.policy, scores_, target_)) {
                    DomainStore child = split(store, pattern_, target_, v, w);
                    const std::int64_t r = reward(bound_before, bound(child));
                    if (config_.policy == PolicyKind::reward_learning) {
                        update_scores(scores_, v, w, r);
                        maybe_rescale(scores_, config_.score_cap);
                    }
                    ++stats_.pattern_branch_counts[static_cast<std::size_t>(v)];
                    ++stats_.target_branch_counts[static_cast<std::size_t>(w)];
                    current_.push_back(Match{v, w});
                    recurse(child, upper_bound, depth + 1);
                    current_.pop_back();
                    if (out_of_budget_ || found_goal_)
                        return;
                }

                recurse(exclude_vertex(store, v), upper_bound, depth + 1);
            }

            auto finish() -> SolveResult
            {
                stats_.time_total = elapsed_seconds();
                SolveResult result;
                result.status = out_of_budget_ ? SolveStatus::timeout : SolveStatus::solved;
                result.optimum_proved = !out_of_budget_;
                result.best = best_;
                result.stats = stats_;
                return result;
            }

            const Graph & pattern_;
            const Graph & target_;
            const SolveConfig & config_;
            std::chrono::steady_clock::time_point start_;
            ScoreTable scores_;
            Solution current_;
            Solution best_;
            SearchStats stats_;
            int depth_limit_ = 0;
            int goal_ = 0;  // 0 = bottom-up; otherwise the cardinality sought
            bool found_goal_ = false;
            bool out_of_budget_ = false;
        };
    }

    // Bottom-up branch and bound: depth-first search over label-class stores,
    // growing an incumbent and pruning whenever |curSol| + bound cannot beat
    // it. Returns the optimum (proved) unless the time or node budget runs
    // out, in which case the best incumbent comes back with timeout status.
    inline auto solve(const Graph & pattern, const Graph & target, const SolveConfig & config)
        -> SolveResult
    {
        if (config.top_down)
            throw std::invalid_argument{"solve requires config.top_down = false"};
        detail::Searcher searcher{pattern, target, config};
        return searcher.run_bottom_up();
    }

    // Top-down driver: searches for a solution of cardinality
    // k = min(|V_p|, |V_t|), k-1, ..., pruning any node whose upper bound is
    // strictly below k and stopping as soon as a size-k solution appears. The
    // score table persists across iterations; one solve is one learning
    // episode.
    inline auto solve_top_down(const Graph & pattern, const Graph & target, const SolveConfig & config)
        -> SolveResult
    {
        if (!config.top_down)
            throw std::invalid_argument{"solve_top_down requires config.top_down = true"};
        detail::Searcher searcher{pattern, target, config};
        return searcher.run_top_down();
    }

    // Dispatch on config.top_down.
    inline auto run_solver(const Graph & pattern, const Graph & target, const SolveConfig & config)
        -> SolveResult
    {
        return config.top_down ? solve_top_down(pattern, target, config) : solve(pattern, target, config);
    }
}

#endif
