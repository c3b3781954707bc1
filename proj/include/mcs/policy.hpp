// SPDX-License-Identifier: Apache-2.0

#ifndef MCS_POLICY_HPP
#define MCS_POLICY_HPP

#include <mcs/domain_store.hpp>
#include <mcs/graph.hpp>

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcs
{
    enum class PolicyKind
    {
        degree,
        reward_learning
    };

    // Accumulated rewards per vertex: S_p over pattern vertices, S_t over
    // target vertices, all starting at 0 and only ever increased (until a
    // rescale halves everything).
    struct ScoreTable
    {
        std::vector<std::int64_t> pattern_scores;
        std::vector<std::int64_t> target_scores;

        ScoreTable() = default;

        ScoreTable(int pattern_count, int target_count) :
            pattern_scores(static_cast<std::size_t>(pattern_count), 0),
            target_scores(static_cast<std::size_t>(target_count), 0)
        {
        }

        friend auto operator==(const ScoreTable &, const ScoreTable &) -> bool = default;
    };

    inline constexpr std::int64_t default_score_cap = 1'000'000'000;

    // Reward of a match: the decrease of the overestimate caused by taking it.
    // Splitting can never grow the bound, so a negative value means the store
    // machinery is broken and we refuse to continue.
    inline auto reward(int bound_before, int bound_after) -> std::int64_t
    {
        if (bound_after > bound_before)
            throw std::logic_error{"negative reward: bound rose from " + std::to_string(bound_before) +
                " to " + std::to_string(bound_after) + " across a split"};
        return static_cast<std::int64_t>(bound_before) - static_cast<std::int64_t>(bound_after);
    }

    inline auto update_scores(ScoreTable & scores, int v, int w, std::int64_t r) -> void
    {
        assert(r >= 0);
        scores.pattern_scores[static_cast<std::size_t>(v)] += r;
        scores.target_scores[static_cast<std::size_t>(w)] += r;
    }

    // Halves every score in both tables (truncating) once any entry exceeds
    // the cap, so stale accumulations cannot drown recent rewards.
    inline auto maybe_rescale(ScoreTable & scores, std::int64_t cap = default_score_cap) -> void
    {
        auto over = [cap](std::int64_t s) { return s > cap; };
        if (std::none_of(scores.pattern_scores.begin(), scores.pattern_scores.end(), over) &&
            std::none_of(scores.target_scores.begin(), scores.target_scores.end(), over))
            return;
        for (auto & s : scores.pattern_scores)
            s /= 2;
        for (auto & s : scores.target_scores)
            s /= 2;
    }

    // Branching vertex within the selected class. Reward learning takes the
    // greatest score, ties by greater degree; the degree policy takes the
    // greatest degree directly. Remaining ties go to the smallest vertex id,
    // keeping runs reproducible. The score table is never touched under the
    // degree policy.
    inline auto select_pattern_vertex(const LabelClass & cls, PolicyKind policy,
        const ScoreTable & scores, const Graph & pattern) -> int
    {
        assert(!cls.pattern_vertices.empty());
        auto better = [&](int candidate, int incumbent) {
            if (policy == PolicyKind::reward_learning) {
                const auto cs = scores.pattern_scores[static_cast<std::size_t>(candidate)];
                const auto is = scores.pattern_scores[static_cast<std::size_t>(incumbent)];
                if (cs != is)
                    return cs > is;
            }
            const int cd = pattern.degree(candidate);
            const int id = pattern.degree(incumbent);
            if (cd != id)
                return cd > id;
            return candidate < incumbent;
        };

        int best = cls.pattern_vertices.front();
        for (int v : cls.pattern_vertices)
            if (better(v, best))
                best = v;
        return best;
    }

    // Order in which target vertices of the class are tried: decreasing score
    // (reward learning) or decreasing degree (degree policy), ties by
    // decreasing degree then increasing vertex id.
    inline auto order_target_vertices(const LabelClass & cls, PolicyKind policy,
        const ScoreTable & scores, const Graph & target) -> std::vector<int>
    {
        std::vector<int> order = cls.target_vertices;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (policy == PolicyKind::reward_learning) {
                const auto sa = scores.target_scores[static_cast<std::size_t>(a)];
                const auto sb = scores.target_scores[static_cast<std::size_t>(b)];
                if (sa != sb)
                    return sa > sb;
            }
            const int da = target.degree(a);
            const int db = target.degree(b);
            if (da != db)
                return da > db;
            return a < b;
        });
        return order;
    }

    inline auto policy_name(PolicyKind policy) -> const char *
    {
        return policy == PolicyKind::degree ? "degree" : "rl";
    }
}

#endif
