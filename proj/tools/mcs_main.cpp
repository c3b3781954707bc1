// SPDX-License-Identifier: Apache-2.0

#include <mcs/bench.hpp>
#include <mcs/graph.hpp>
#include <mcs/lad.hpp>
#include <mcs/oracle.hpp>
#include <mcs/result_csv.hpp>
#include <mcs/search.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_usage = 1;
    constexpr int exit_timeout = 2;
    constexpr int exit_disagreement = 3;

    struct InstanceArgs
    {
        std::string pattern_file;
        std::string target_file;
        bool directed = false;
        bool labelled = false;
    };

    auto add_instance_options(CLI::App & cmd, InstanceArgs & args) -> void
    {
        cmd.add_option("--pattern", args.pattern_file, "Pattern graph file (LAD)")->required();
        cmd.add_option("--target", args.target_file, "Target graph file (LAD)")->required();
        cmd.add_flag("--directed", args.directed, "Treat listed neighbours as out-neighbours");
        cmd.add_flag("--labelled", args.labelled, "Read a vertex label before each neighbour list");
    }

    auto read_file(const std::string & path) -> std::string
    {
        std::ifstream in{path};
        if (!in)
            throw std::runtime_error{"cannot open " + path};
        std::ostringstream text;
        text << in.rdbuf();
        return text.str();
    }

    auto load_instance(const InstanceArgs & args) -> std::pair<mcs::Graph, mcs::Graph>
    {
        const mcs::ParseOptions opts{args.directed, args.labelled};
        return {mcs::parse_lad(read_file(args.pattern_file), opts),
            mcs::parse_lad(read_file(args.target_file), opts)};
    }

    auto print_matches(const mcs::Solution & matches) -> void
    {
        mcs::Solution ordered = matches;
        std::sort(ordered.begin(), ordered.end(),
            [](const mcs::Match & a, const mcs::Match & b) { return a.pattern < b.pattern; });
        for (const auto & m : ordered)
            std::cout << '(' << m.pattern << " -> " << m.target << ")\n";
    }

    auto run_solve(const InstanceArgs & instance, const std::string & heuristic, bool top_down,
        double timeout, bool stats, bool quiet) -> int
    {
        auto [pattern, target] = load_instance(instance);

        mcs::SolveConfig config;
        config.policy = heuristic == "rl" ? mcs::PolicyKind::reward_learning : mcs::PolicyKind::degree;
        config.top_down = top_down;
        config.timeout_seconds = timeout;

        const mcs::SolveResult result = mcs::run_solver(pattern, target, config);

        std::cout << "size " << result.best.size() << '\n';
        if (!quiet)
            print_matches(result.best);
        std::cout << "status " << (result.status == mcs::SolveStatus::solved ? "solved" : "timeout")
                  << '\n';
        if (stats) {
            std::cout << "recursive_calls " << result.stats.recursive_calls << '\n';
            char line[64];
            std::snprintf(line, sizeof line, "time_total %.3f\n", result.stats.time_total);
            std::cout << line;
            std::snprintf(line, sizeof line, "time_opt %.3f\n", result.stats.time_opt);
            std::cout << line;
            const double v_sd = result.stats.pattern_branch_counts.empty() ? 0.0
                : mcs::branching_sd(result.stats.pattern_branch_counts);
            const double w_sd = result.stats.target_branch_counts.empty() ? 0.0
                : mcs::branching_sd(result.stats.target_branch_counts);
            std::snprintf(line, sizeof line, "v_sd %.6f\n", v_sd);
            std::cout << line;
            std::snprintf(line, sizeof line, "w_sd %.6f\n", w_sd);
            std::cout << line;
        }
        return result.status == mcs::SolveStatus::solved ? exit_ok : exit_timeout;
    }

    auto run_bench_cmd(const std::string & manifest_file, const std::string & out_file,
        const std::string & configs_arg, int jobs, double cutoff, const std::string & cactus_file)
        -> int
    {
        const mcs::Manifest manifest = mcs::load_manifest(manifest_file);

        std::vector<std::string> config_names;
        if (configs_arg.empty()) {
            config_names = mcs::bench_config_names();
        }
        else {
            std::istringstream list{configs_arg};
            for (std::string name; std::getline(list, name, ',');) {
                if (!mcs::config_by_name(name))
                    throw std::runtime_error{"unknown config '" + name +
                        "' (expected degree, rl, degree-td or rl-td)"};
                config_names.push_back(name);
            }
            if (config_names.empty())
                throw std::runtime_error{"--configs must name at least one config"};
        }

        const mcs::BenchReport report = mcs::run_bench(manifest, config_names, cutoff, jobs);

        std::ofstream out{out_file};
        if (!out)
            throw std::runtime_error{"cannot write " + out_file};
        out << mcs::results_csv(report);
        out.close();

        for (const auto & row : report.rows)
            if (row.error)
                std::cerr << "error: " << row.instance_id << " [" << row.config_name << "]: "
                          << row.message << '\n';

        std::cout << mcs::summary_lines(report);

        if (!cactus_file.empty()) {
            std::ofstream cactus{cactus_file};
            if (!cactus)
                throw std::runtime_error{"cannot write " + cactus_file};
            cactus << mcs::cactus_csv(report);
        }
        return exit_ok;
    }

    auto run_oracle_cmd(const InstanceArgs & instance, double timeout, int cap, bool inject_fault)
        -> int
    {
        auto [pattern, target] = load_instance(instance);

        const mcs::OracleResult oracle = mcs::brute_force_mcs(pattern, target, cap);

        bool all_agree = true;
        std::string report = "oracle " + std::to_string(oracle.size);
        for (const auto & name : mcs::bench_config_names()) {
            auto config = mcs::config_by_name(name);
            config->timeout_seconds = timeout;
            const mcs::SolveResult result = mcs::run_solver(pattern, target, *config);
            int engine_size = static_cast<int>(result.best.size());
            if (inject_fault)
                ++engine_size;
            const bool ok = result.status == mcs::SolveStatus::solved && engine_size == oracle.size &&
                mcs::verify_common_subgraph(pattern, target, result.best);
            all_agree = all_agree && ok;
            report += "; " + name + ' ' + std::to_string(engine_size) + (ok ? " ok" : " MISMATCH");
        }
        std::cout << report << '\n';
        return all_agree ? exit_ok : exit_disagreement;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Exact maximum common induced subgraph solver"};
    app.require_subcommand(1);

    InstanceArgs solve_instance;
    std::string solve_heuristic = "degree";
    bool solve_top_down = false;
    double solve_timeout = 1800.0;
    bool solve_stats = false;
    bool solve_quiet = false;
    auto * solve_cmd = app.add_subcommand("solve", "Solve a single instance");
    add_instance_options(*solve_cmd, solve_instance);
    solve_cmd->add_option("--heuristic", solve_heuristic, "Branching heuristic")
        ->check(CLI::IsMember({"degree", "rl"}));
    solve_cmd->add_flag("--top-down", solve_top_down, "Search decreasing cardinalities");
    solve_cmd->add_option("--timeout", solve_timeout, "Cutoff in seconds")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--stats", solve_stats, "Print search statistics");
    solve_cmd->add_flag("--quiet", solve_quiet, "Suppress the match list");

    std::string bench_manifest;
    std::string bench_out;
    std::string bench_configs;
    int bench_jobs = 1;
    double bench_cutoff = 1800.0;
    std::string bench_cactus;
    auto * bench_cmd = app.add_subcommand("bench", "Run a manifest-driven benchmark batch");
    bench_cmd->add_option("--manifest", bench_manifest, "Instance manifest (TSV)")->required();
    bench_cmd->add_option("--out", bench_out, "Results CSV path")->required();
    bench_cmd->add_option("--configs", bench_configs,
        "Comma-separated subset of degree,rl,degree-td,rl-td (default: all)");
    bench_cmd->add_option("--jobs", bench_jobs, "Concurrent solves")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--cutoff", bench_cutoff, "Per-instance cutoff in seconds")
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--cactus", bench_cactus, "Also write sorted solve-time data here");

    InstanceArgs oracle_instance;
    double oracle_timeout = 1800.0;
    int oracle_cap = mcs::default_oracle_cap;
    bool oracle_fault = false;
    auto * oracle_cmd = app.add_subcommand("oracle", "Cross-check the engine against brute force");
    add_instance_options(*oracle_cmd, oracle_instance);
    oracle_cmd->add_option("--timeout", oracle_timeout, "Cutoff in seconds per engine run")
        ->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--cap", oracle_cap, "Refuse instances with min side beyond this");
    oracle_cmd->add_flag("--inject-fault", oracle_fault)->group("");  // test hook

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (solve_cmd->parsed())
            return run_solve(solve_instance, solve_heuristic, solve_top_down, solve_timeout,
                solve_stats, solve_quiet);
        if (bench_cmd->parsed())
            return run_bench_cmd(bench_manifest, bench_out, bench_configs, bench_jobs, bench_cutoff,
                bench_cactus);
        if (oracle_cmd->parsed())
            return run_oracle_cmd(oracle_instance, oracle_timeout, oracle_cap, oracle_fault);
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
