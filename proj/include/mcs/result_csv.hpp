// SPDX-License-Identifier: Apache-2.0

#ifndef MCS_RESULT_CSV_HPP
#define MCS_RESULT_CSV_HPP

#include <mcs/policy.hpp>
#include <mcs/search.hpp>

#include <cstdio>
#include <string>
#include <string_view>

namespace mcs
{
    // Results CSV column order. Times are seconds with millisecond precision;
    // the sd columns carry six decimals.
    inline constexpr std::string_view result_csv_header =
        "instance,heuristic,top_down,status,size,time_total,time_opt,recursive_calls,v_sd,w_sd";

    namespace detail
    {
        inline auto formatted(const char * format, double value) -> std::string
        {
            char buffer[64];
            std::snprintf(buffer, sizeof buffer, format, value);
            return buffer;
        }

        inline auto sd_or_zero(std::span<const std::uint64_t> counts) -> double
        {
            return counts.empty() ? 0.0 : branching_sd(counts);
        }
    }

    // One CSV record for a finished solve: instance id, heuristic, top-down
    // flag, status, solution size (best incumbent on timeout), total and
    // time-to-optimum seconds, recursive calls, and the branching standard
    // deviations of both graphs.
    inline auto write_result_row(std::string_view instance_id, const SolveResult & result,
        const SolveConfig & config) -> std::string
    {
        std::string row{instance_id};
        row += ',';
        row += policy_name(config.policy);
        row += ',';
        row += config.top_down ? "true" : "false";
        row += ',';
        row += result.status == SolveStatus::solved ? "solved" : "timeout";
        row += ',';
        row += std::to_string(result.best.size());
        row += ',';
        row += detail::formatted("%.3f", result.stats.time_total);
        row += ',';
        row += detail::formatted("%.3f", result.stats.time_opt);
        row += ',';
        row += std::to_string(result.stats.recursive_calls);
        row += ',';
        row += detail::formatted("%.6f", detail::sd_or_zero(result.stats.pattern_branch_counts));
        row += ',';
        row += detail::formatted("%.6f", detail::sd_or_zero(result.stats.target_branch_counts));
        return row;
    }

    // Record for an instance that failed to load; keeps batch CSVs rectangular.
    inline auto write_error_row(std::string_view instance_id, const SolveConfig & config) -> std::string
    {
        std::string row{instance_id};
        row += ',';
        row += policy_name(config.policy);
        row += ',';
        row += config.top_down ? "true" : "false";
        row += ",error,0,0.000,0.000,0,0.000000,0.000000";
        return row;
    }
}

#endif
