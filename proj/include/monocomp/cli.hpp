#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "monocomp/affine_plane.hpp"
#include "monocomp/checks.hpp"
#include "monocomp/components.hpp"
#include "monocomp/finite_field.hpp"
#include "monocomp/graph_io.hpp"
#include "monocomp/gyarfas.hpp"
#include "monocomp/random_graphs.hpp"
#include "monocomp/reports.hpp"
#include "monocomp/search.hpp"

namespace monocomp {

namespace detail {

inline bool write_text_file(const std::string& path, const std::string& text, std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot write " << path << "\n";
        return false;
    }
    f << text;
    return true;
}

/*
 * CLI11 only processes config files registered on the root app, so the
 * per-subcommand --config files are expanded before parsing: each key=value
 * line becomes --key=value unless --key already appears on the command line
 * (explicit flags win). Repeat a key to feed a multi-value option.
 */
inline bool expand_flat_config(std::vector<std::string>& args, std::ostream& err) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) return true;  // CLI11 reports the missing value
            path = args[i + 1];
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            break;
        }
    }
    if (path.empty()) return true;
    std::ifstream f(path);
    if (!f) {
        err << "error: cannot open config file " << path << "\n";
        return false;
    }
    auto trim = [](const std::string& s) {
        auto b = s.find_first_not_of(" \t\r");
        auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    auto present = [&args](const std::string& flag) {
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
        return false;
    };
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::string> injected;
    while (std::getline(f, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        std::string key = eq == std::string::npos ? std::string() : trim(t.substr(0, eq));
        if (key.empty()) {
            err << "error: " << path << " line " << lineno << ": expected key=value\n";
            return false;
        }
        if (key == "config") continue;
        if (!present("--" + key)) injected.push_back("--" + key + "=" + trim(t.substr(eq + 1)));
    }
    args.insert(args.end(), injected.begin(), injected.end());
    return true;
}

inline void print_suite_text(const SuiteReport& report, std::ostream& out) {
    out << report.suite << " suite\n";
    for (const auto& c : report.checks) {
        out << "  " << c.name << ": checks=" << c.checks << " violations=" << c.violations
            << " vacuous=" << c.vacuous << " skipped=" << c.skipped
            << " min_margin=" << (c.min_margin ? c.min_margin->str() : "-") << "\n";
    }
    out << (report.pass() ? "PASS" : "FAIL") << "\n";
}

}  // namespace detail

/**
 * In-process CLI entry point. args excludes the program name. Exit codes:
 * 0 success / all requested checks pass, 1 a check or verdict failed,
 * 2 usage or input errors.
 */
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    if (!detail::expand_flat_config(args, err)) return 2;

    CLI::App app{"edge-colored graph experiments: extremal colorings, random hosts,\n"
                 "exact inequality checkers, and adversarial search over monochromatic\n"
                 "components"};
    app.require_subcommand(1);
    std::string config_path;  // consumed by expand_flat_config; bound for --help only

    auto* plane_cmd =
        app.add_subcommand("plane", "print the affine plane of order q: one text line per "
                                    "geometric line, 'class: point ids'");
    int plane_q = 0;
    plane_cmd->add_option("q", plane_q, "plane order (prime power, at most 64)")->required();

    auto* color_cmd = app.add_subcommand("color", "write the extremal r-coloring of K_n in the "
                                                  "colored-graph file format");
    std::uint32_t color_n = 0;
    int color_r = 0;
    std::string color_out;
    color_cmd->add_option("--n", color_n, "vertex count")->required();
    color_cmd->add_option("--r", color_r, "color count (r-1 must be a prime power)")->required();
    color_cmd->add_option("--out", color_out, "output file (default: stdout)");
    color_cmd->add_option("--config", config_path, "flat key=value config file; flags override");

    auto* sample_cmd = app.add_subcommand("sample", "sample G(n,p) and write it uncolored "
                                                    "('n m 0' header)");
    std::uint32_t sample_n = 0;
    double sample_p = 0.0;
    std::uint64_t sample_seed = 0;
    std::string sample_out;
    sample_cmd->add_option("--n", sample_n, "vertex count")->required();
    sample_cmd->add_option("--p", sample_p, "edge probability in [0,1]")->required();
    sample_cmd->add_option("--seed", sample_seed, "RNG seed (default 0)");
    sample_cmd->add_option("--out", sample_out, "output file (default: stdout)");
    sample_cmd->add_option("--config", config_path, "flat key=value config file; flags override");

    auto* analyze_cmd = app.add_subcommand(
        "analyze", "component breakdown and bound verdicts for a colored-graph file; exit 1 if "
                   "the largest component falls below the proven edge fraction");
    std::string analyze_in, analyze_json;
    analyze_cmd->add_option("--in", analyze_in, "colored-graph file")->required();
    analyze_cmd->add_option("--json", analyze_json, "also write a JSON report here");
    analyze_cmd->add_option("--config", config_path, "flat key=value config file; flags override");

    auto* search_cmd = app.add_subcommand(
        "search", "anneal toward colorings minimizing the largest monochromatic component; "
                  "prints a JSON report; exit 1 if the result beats the proven bound");
    std::string search_in, search_json, search_init = "random";
    std::uint32_t search_n = 0;
    double search_p = -1.0;
    int search_r = 0;
    std::uint64_t search_seed = 1, search_iters = 1000;
    std::uint32_t search_restarts = 1;
    double search_cooling = 0.999;
    double search_t0 = -1.0;
    search_cmd->add_option("--in", search_in, "host graph file (colors ignored)");
    search_cmd->add_option("--n", search_n, "sample host G(n,p): vertex count");
    search_cmd->add_option("--p", search_p, "sample host G(n,p): edge probability");
    search_cmd->add_option("--r", search_r, "color count")->required();
    search_cmd->add_option("--seed", search_seed, "RNG seed (default 1)");
    search_cmd->add_option("--iters", search_iters, "iterations per restart (default 1000)");
    search_cmd->add_option("--restarts", search_restarts, "independent replicas (default 1)");
    search_cmd->add_option("--init", search_init, "initial coloring")
        ->check(CLI::IsMember({"random", "gyarfas"}));
    search_cmd->add_option("--cooling", search_cooling, "geometric cooling factor (default 0.999)");
    search_cmd->add_option("--t0", search_t0, "initial temperature (default 0.05*e(G))");
    search_cmd->add_option("--json", search_json, "write the JSON report here instead of stdout");
    search_cmd->add_option("--config", config_path, "flat key=value config file; flags override");

    auto* verify_cmd = app.add_subcommand("verify", "run a named check suite; exit 1 on any "
                                                    "violation");
    std::string verify_suite, verify_json;
    std::uint64_t verify_seed = 1;
    verify_cmd->add_option("--suite", verify_suite, "deterministic | sparse | bounds")
        ->required()
        ->check(CLI::IsMember({"deterministic", "sparse", "bounds"}));
    verify_cmd->add_option("--seed", verify_seed, "base seed (default 1; sparse uses S,S+1,S+2)");
    verify_cmd->add_option("--json", verify_json, "write the JSON report here");
    verify_cmd->add_option("--config", config_path, "flat key=value config file; flags override");

    auto* sweep_cmd = app.add_subcommand(
        "sweep", "CSV over a (p, seed) grid: plane-based, random, and annealed colorings per "
                 "cell; exit 1 if any row fails the proven threshold");
    SweepConfig sweep_cfg;
    std::string sweep_out;
    sweep_cmd->add_option("--n", sweep_cfg.n, "vertex count (default 400)");
    sweep_cmd->add_option("--r", sweep_cfg.r, "color count (default 3)");
    sweep_cmd->add_option("--p", sweep_cfg.p_grid, "edge probabilities (repeatable)")->required();
    sweep_cmd->add_option("--seed", sweep_cfg.seeds, "seeds (repeatable; default 1)");
    sweep_cmd->add_option("--iters", sweep_cfg.iterations, "anneal iterations (default 1000)");
    sweep_cmd->add_option("--restarts", sweep_cfg.restarts, "anneal restarts (default 1)");
    sweep_cmd->add_option("--out", sweep_out, "CSV output file (default: stdout)");
    sweep_cmd->add_option("--config", config_path, "flat key=value config file; flags override");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (plane_cmd->parsed()) {
            AffinePlane plane = build_affine_plane(build_field(plane_q));
            for (std::size_t ci = 0; ci < plane.classes.size(); ++ci)
                for (auto id : plane.classes[ci]) {
                    out << ci << ":";
                    for (auto pt : plane.lines[id]) out << ' ' << pt;
                    out << "\n";
                }
            return 0;
        }

        if (color_cmd->parsed()) {
            GyarfasColoring gc = gyarfas_coloring(color_n, color_r);
            Graph g = Graph::complete(color_n);
            std::string text = colored_graph_to_string(g, &gc.coloring);
            if (color_out.empty()) {
                out << text;
                return 0;
            }
            return detail::write_text_file(color_out, text, err) ? 0 : 2;
        }

        if (sample_cmd->parsed()) {
            Graph g = sample_gnp(sample_n, sample_p, {sample_seed, 0});
            std::string text = colored_graph_to_string(g, nullptr);
            if (sample_out.empty()) {
                out << text;
                return 0;
            }
            return detail::write_text_file(sample_out, text, err) ? 0 : 2;
        }

        if (analyze_cmd->parsed()) {
            ColoredGraphFile file = read_colored_graph_file(analyze_in);
            if (file.coloring.r == 0) {
                err << "error: file has no coloring\n";
                return 2;
            }
            if (file.graph.edge_count() == 0) {
                err << "error: graph has no edges\n";
                return 2;
            }
            ComponentReport report = monochromatic_components(file.graph, file.coloring);
            VerdictContext ctx;
            ctx.r = file.coloring.r;
            BoundVerdict verdict = verdict_bounds(file.graph, file.coloring, ctx);

            out << "n=" << file.graph.vertex_count() << " m=" << file.graph.edge_count()
                << " r=" << file.coloring.r << "\n";
            out << "components=" << report.component_count() << " largest: color="
                << report.largest_color << " edges=" << report.largest.edge_count
                << " vertices=" << report.largest.vertex_count << "\n";
            out << "z=" << report.z.str() << " (" << fmt_double(report.z.to_double()) << ")\n";
            for (const auto& [name, threshold] : verdict.thresholds)
                out << "  " << name << " threshold=" << threshold.str() << " "
                    << (verdict.pass.at(name) ? "pass" : "fail") << "\n";
            if (!analyze_json.empty()) {
                nlohmann::json doc = {{"schema_version", 1},
                                      {"config", {{"in", analyze_in}}},
                                      {"n", file.graph.vertex_count()},
                                      {"edges", file.graph.edge_count()},
                                      {"r", file.coloring.r},
                                      {"largest_edges", report.largest.edge_count},
                                      {"z", report.z.str()},
                                      {"pass", verdict.pass.at("proven_1_6")}};
                for (const auto& [name, threshold] : verdict.thresholds)
                    doc["thresholds"][name] = {{"threshold", threshold.str()},
                                               {"pass", verdict.pass.at(name)}};
                if (!detail::write_text_file(analyze_json, doc.dump(2) + "\n", err)) return 2;
            }
            return verdict.pass.at("proven_1_6") ? 0 : 1;
        }

        if (search_cmd->parsed()) {
            std::optional<Graph> host;
            if (!search_in.empty()) {
                host = read_colored_graph_file(search_in).graph;
            } else {
                if (search_n == 0 || search_p < 0.0) {
                    err << "error: provide --in FILE or both --n and --p\n";
                    return 2;
                }
                host = sample_gnp(search_n, search_p, {search_seed, 0});
            }
            SearchParams params;
            params.iterations = search_iters;
            params.restarts = search_restarts;
            params.cooling = search_cooling;
            if (search_t0 > 0.0) params.initial_temperature = search_t0;
            params.seed = {search_seed, 1};
            params.init = search_init == "gyarfas" ? SearchParams::Init::gyarfas
                                                   : SearchParams::Init::random;
            SearchResult res = anneal(*host, search_r, params);
            nlohmann::json doc = search_report_json(*host, search_r, params, res);
            std::string text = doc.dump(2) + "\n";
            if (search_json.empty())
                out << text;
            else if (!detail::write_text_file(search_json, text, err))
                return 2;
            return doc["pass"].get<bool>() ? 0 : 1;
        }

        if (verify_cmd->parsed()) {
            SuiteReport report;
            if (verify_suite == "deterministic")
                report = deterministic_suite(verify_seed);
            else if (verify_suite == "sparse")
                report = sparse_suite({verify_seed, verify_seed + 1, verify_seed + 2});
            else
                report = bounds_suite(verify_seed);
            detail::print_suite_text(report, out);
            if (!verify_json.empty() &&
                !detail::write_text_file(verify_json, suite_json_string(report), err))
                return 2;
            if (!report.pass()) {
                const SuiteCheck* bad = report.first_failing();
                err << "first failure: " << bad->name << " " << bad->first_failure << "\n";
                return 1;
            }
            return 0;
        }

        if (sweep_cmd->parsed()) {
            if (sweep_cfg.seeds.empty()) sweep_cfg.seeds = {1};
            std::vector<SweepRow> rows = run_sweep(sweep_cfg);
            std::string csv = sweep_csv(sweep_cfg, rows);
            if (sweep_out.empty())
                out << csv;
            else if (!detail::write_text_file(sweep_out, csv, err))
                return 2;
            for (const auto& row : rows)
                if (!row.warning && !row.pass_proven) {
                    err << "proven threshold failed: p=" << fmt_double(row.p)
                        << " seed=" << row.seed << " source=" << row.source
                        << " z=" << row.z.str() << "\n";
                    return 1;
                }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        // Reserved for the falsification guard: a coloring beat a proven bound.
        err << "check failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace monocomp
