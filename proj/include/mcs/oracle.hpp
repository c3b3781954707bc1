// SPDX-License-Identifier: Apache-2.0

#ifndef MCS_ORACLE_HPP
#define MCS_ORACLE_HPP

#include <mcs/graph.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcs
{
    struct OracleResult
    {
        int size = 0;
        Solution witness;
    };

    inline constexpr int default_oracle_cap = 10;

    namespace detail
    {
        struct BruteForce
        {
            const Graph & pattern;
            const Graph & target;
            Solution current;
            Solution best;
            std::vector<bool> target_used;

            auto feasible(int v, int w) const -> bool
            {
                if (pattern.label(v) != target.label(w))
                    return false;
                for (const auto & m : current)
                    if (pattern.adjacency_kind(v, m.pattern) != target.adjacency_kind(w, m.target))
                        return false;
                return true;
            }

            // Include/exclude over pattern vertices in index order, with only
            // the remaining-vertices bound. Deliberately naive: shares nothing
            // with the label-class machinery it is ground truth for.
            auto explore(int v) -> void
            {
                if (current.size() + static_cast<std::size_t>(pattern.size() - v) <= best.size())
                    return;
                if (v == pattern.size()) {
                    if (current.size() > best.size())
                        best = current;
                    return;
                }
                for (int w = 0; w < target.size(); ++w) {
                    if (target_used[static_cast<std::size_t>(w)] || !feasible(v, w))
                        continue;
                    target_used[static_cast<std::size_t>(w)] = true;
                    current.push_back(Match{v, w});
                    explore(v + 1);
                    current.pop_back();
                    target_used[static_cast<std::size_t>(w)] = false;
                }
                explore(v + 1);
            }
        };
    }

    // Exhaustive maximum-common-induced-subgraph search for small instances.
    // Refuses anything with min(|V_p|, |V_t|) beyond the cap; meant purely as
    // ground truth for the main engine.
    inline auto brute_force_mcs(const Graph & pattern, const Graph & target,
        int limit = default_oracle_cap) -> OracleResult
    {
        if (std::min(pattern.size(), target.size()) > limit)
            throw std::invalid_argument{"instance exceeds the oracle cap of " + std::to_string(limit) +
                " (min side " + std::to_string(std::min(pattern.size(), target.size())) + ")"};

        detail::BruteForce search{pattern, target, {}, {},
            std::vector<bool>(static_cast<std::size_t>(target.size()), false)};
        search.explore(0);
        return OracleResult{static_cast<int>(search.best.size()), search.best};
    }
}

#endif
