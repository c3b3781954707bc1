// SPDX-License-Identifier: Apache-2.0

#ifndef MCS_BENCH_HPP
#define MCS_BENCH_HPP

#include <mcs/lad.hpp>
#include <mcs/result_csv.hpp>
#include <mcs/search.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace mcs
{
    struct ManifestEntry
    {
        std::string id;
        std::filesystem::path pattern_path;
        std::filesystem::path target_path;
        ParseOptions options;
    };

    struct Manifest
    {
        std::vector<ManifestEntry> entries;
    };

    // Manifest lines: id<TAB>pattern_path<TAB>target_path[<TAB>flags] with
    // flags a comma-separated subset of {directed, labelled}. Blank lines and
    // lines starting with '#' are skipped. Relative paths resolve against
    // base_dir.
    inline auto parse_manifest(std::string_view text, const std::filesystem::path & base_dir) -> Manifest
    {
        auto resolve = [&](std::string_view raw) {
            std::filesystem::path p{std::string{raw}};
            return p.is_absolute() ? p : base_dir / p;
        };

        Manifest manifest;
        std::size_t line_number = 0;
        std::istringstream lines{std::string{text}};
        for (std::string line; std::getline(lines, line);) {
            ++line_number;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty() || line.front() == '#')
                continue;

            std::vector<std::string> fields;
            std::size_t start = 0;
            while (true) {
                auto tab = line.find('\t', start);
                fields.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
                if (tab == std::string::npos)
                    break;
                start = tab + 1;
            }
            if (fields.size() < 3 || fields.size() > 4)
                throw std::runtime_error{"manifest line " + std::to_string(line_number) +
                    ": expected id, pattern, target and optional flags separated by tabs"};

            ManifestEntry entry;
            entry.id = fields[0];
            entry.pattern_path = resolve(fields[1]);
            entry.target_path = resolve(fields[2]);
            if (fields.size() == 4 && !fields[3].empty()) {
                std::istringstream flags{fields[3]};
                for (std::string flag; std::getline(flags, flag, ',');) {
                    if (flag == "directed")
                        entry.options.directed = true;
                    else if (flag == "labelled")
                        entry.options.labelled = true;
                    else
                        throw std::runtime_error{"manifest line " + std::to_string(line_number) +
                            ": unknown flag '" + flag + "'"};
                }
            }
            for (const auto & existing : manifest.entries)
                if (existing.id == entry.id)
                    throw std::runtime_error{"manifest line " + std::to_string(line_number) +
                        ": duplicate instance id '" + entry.id + "'"};
            manifest.entries.push_back(std::move(entry));
        }
        return manifest;
    }

    inline auto load_manifest(const std::filesystem::path & file) -> Manifest
    {
        std::ifstream in{file};
        if (!in)
            throw std::runtime_error{"cannot open manifest " + file.string()};
        std::ostringstream text;
        text << in.rdbuf();
        return parse_manifest(text.str(), file.parent_path());
    }

    // The four solver configurations of the benchmark harness.
    inline auto bench_config_names() -> const std::vector<std::string> &
    {
        static const std::vector<std::string> names{"degree", "rl", "degree-td", "rl-td"};
        return names;
    }

    inline auto config_by_name(std::string_view name) -> std::optional<SolveConfig>
    {
        SolveConfig config;
        if (name == "degree") {
            config.policy = PolicyKind::degree;
            config.top_down = false;
        }
        else if (name == "rl") {
            config.policy = PolicyKind::reward_learning;
            config.top_down = false;
        }
        else if (name == "degree-td") {
            config.policy = PolicyKind::degree;
            config.top_down = true;
        }
        else if (name == "rl-td") {
            config.policy = PolicyKind::reward_learning;
            config.top_down = true;
        }
        else {
            return std::nullopt;
        }
        return config;
    }

    struct BenchRow
    {
        std::string instance_id;
        std::string config_name;
        std::string csv;
        bool solved = false;
        bool error = false;
        double time_total = 0.0;
        std::string message;  // diagnostic for error rows
    };

    struct BenchSummary
    {
        std::string config_name;
        int solved = 0;
        int total = 0;
        double mean_time_solved = 0.0;  // over solved instances only
    };

    struct BenchReport
    {
        std::vector<BenchRow> rows;  // entry-major, config-minor order
        std::vector<BenchSummary> summaries;
    };

    namespace detail
    {
        inline auto run_bench_task(const ManifestEntry & entry, const std::string & config_name,
            const SolveConfig & config) -> BenchRow
        {
            BenchRow row;
            row.instance_id = entry.id;
            row.config_name = config_name;
            try {
                std::ifstream pattern_in{entry.pattern_path};
                std::ifstream target_in{entry.target_path};
                if (!pattern_in)
                    throw std::runtime_error{"cannot open " + entry.pattern_path.string()};
                if (!target_in)
                    throw std::runtime_error{"cannot open " + entry.target_path.string()};
                std::ostringstream pattern_text, target_text;
                pattern_text << pattern_in.rdbuf();
                target_text << target_in.rdbuf();
                const Graph pattern = parse_lad(pattern_text.str(), entry.options);
                const Graph target = parse_lad(target_text.str(), entry.options);

                const SolveResult result = run_solver(pattern, target, config);
                row.csv = write_result_row(entry.id, result, config);
                row.solved = result.status == SolveStatus::solved;
                row.time_total = result.stats.time_total;
            }
            catch (const std::exception & e) {
                row.csv = write_error_row(entry.id, config);
                row.error = true;
                row.message = e.what();
            }
            return row;
        }
    }

    // Runs every (instance, config) pair, each in isolation under the cutoff,
    // with up to `jobs` solves in flight. Row order is deterministic and
    // independent of the job count.
    inline auto run_bench(const Manifest & manifest, const std::vector<std::string> & config_names,
        double cutoff_seconds, int jobs) -> BenchReport
    {
        if (jobs < 1)
            throw std::invalid_argument{"jobs must be at least 1"};

        struct Task
        {
            const ManifestEntry * entry;
            const std::string * config_name;
            SolveConfig config;
        };

        std::vector<Task> tasks;
        for (const auto & entry : manifest.entries)
            for (const auto & name : config_names) {
                auto config = config_by_name(name);
                if (!config)
                    throw std::invalid_argument{"unknown config '" + name + "'"};
                config->timeout_seconds = cutoff_seconds;
                tasks.push_back(Task{&entry, &name, *config});
            }

        BenchReport report;
        report.rows.resize(tasks.size());

        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= tasks.size())
                    return;
                report.rows[i] = detail::run_bench_task(*tasks[i].entry, *tasks[i].config_name,
                    tasks[i].config);
            }
        };

        if (jobs == 1 || tasks.size() <= 1) {
            worker();
        }
        else {
            std::vector<std::thread> threads;
            const int thread_count = std::min<int>(jobs, static_cast<int>(tasks.size()));
            threads.reserve(static_cast<std::size_t>(thread_count));
            for (int t = 0; t < thread_count; ++t)
                threads.emplace_back(worker);
            for (auto & thread : threads)
                thread.join();
        }

        for (const auto & name : config_names) {
            BenchSummary summary;
            summary.config_name = name;
            double time_sum = 0.0;
            for (const auto & row : report.rows) {
                if (row.config_name != name)
                    continue;
                ++summary.total;
                if (row.solved && !row.error) {
                    ++summary.solved;
                    time_sum += row.time_total;
                }
            }
            summary.mean_time_solved = summary.solved > 0 ? time_sum / summary.solved : 0.0;
            report.summaries.push_back(std::move(summary));
        }
        return report;
    }

    inline auto results_csv(const BenchReport & report) -> std::string
    {
        std::string out{result_csv_header};
        out += '\n';
        for (const auto & row : report.rows) {
            out += row.csv;
            out += '\n';
        }
        return out;
    }

    inline auto summary_lines(const BenchReport & report) -> std::string
    {
        std::string out;
        for (const auto & summary : report.summaries) {
            char line[160];
            std::snprintf(line, sizeof line, "%s: solved %d/%d (mean %.3f s over solved)\n",
                summary.config_name.c_str(), summary.solved, summary.total, summary.mean_time_solved);
            out += line;
        }
        return out;
    }

    // Per-config sorted solve-time sequences: the k-th line of a config says k
    // instances are solved within that many seconds. Feedable straight into a
    // cactus plot.
    inline auto cactus_csv(const BenchReport & report) -> std::string
    {
        std::string out = "config,solved,time\n";
        for (const auto & summary : report.summaries) {
            std::vector<double> times;
            for (const auto & row : report.rows)
                if (row.config_name == summary.config_name && row.solved && !row.error)
                    times.push_back(row.time_total);
            std::sort(times.begin(), times.end());
            for (std::size_t k = 0; k < times.size(); ++k) {
                char line[96];
                std::snprintf(line, sizeof line, "%s,%zu,%.3f\n", summary.config_name.c_str(), k + 1,
                    times[k]);
                out += line;
            }
        }
        return out;
    }
}

#endif
