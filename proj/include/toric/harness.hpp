// Copyright 2026 The toric authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORIC_HARNESS_HPP
#define TORIC_HARNESS_HPP

/// Batch harness: run the four tests per model with timings and budgets, and
/// emit result rows in the fixed column order
///   model,m,n,iota,t_iota,mu,t_mu,eta,t_eta,gamma,t_gamma,coset,group,t_total
/// as an aligned table, csv, or json.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toric/parse.hpp"
#include "toric/toricity.hpp"

namespace toric {

enum class OutputFormat { table, csv, json };

struct RunConfig {
    std::uint64_t characteristic = 0;
    OrderKind order = OrderKind::grevlex;
    double test_timeout = 0.0;   // seconds per sub-test, 0 = unlimited
    double model_timeout = 0.0;  // seconds per model, 0 = unlimited
    bool fail_fast = false;
    OutputFormat format = OutputFormat::table;
    int jobs = 1;
    std::string output_path;  // empty = stdout
};

/// One result line. Timings are wall-clock seconds; statuses render as
/// true/false/timeout/skipped, or "error" across the board when the model
/// failed to load (the message is kept alongside).
struct ReportRow {
    std::string model;
    bool ok = false;
    std::string error;
    int m = 0;
    int n = 0;
    TestOutcome iota, mu, eta, gamma;
    Verdict coset = Verdict::Unknown;
    Verdict group = Verdict::Unknown;
    double total_seconds = 0.0;

    bool timed_out() const {
        return ok && (iota.status == TestStatus::Timeout || mu.status == TestStatus::Timeout ||
                      eta.status == TestStatus::Timeout || gamma.status == TestStatus::Timeout);
    }
};

inline ReportRow run_model(const std::string& path, const RunConfig& cfg) {
    ReportRow row;
    row.model = model_id_from_path(path);
    try {
        PolySystem sys = parse_system_file(path, FieldSpec(cfg.characteristic), cfg.order);
        ClassifyOptions opts;
        opts.order = cfg.order;
        opts.test_budget_seconds = cfg.test_timeout;
        opts.model_budget_seconds = cfg.model_timeout;
        opts.fail_fast = cfg.fail_fast;
        ToricityReport rep = classify(sys, opts);
        row.ok = true;
        row.m = rep.m;
        row.n = rep.n;
        row.iota = rep.iota;
        row.mu = rep.mu;
        row.eta = rep.eta;
        row.gamma = rep.gamma;
        row.coset = rep.coset;
        row.group = rep.group;
        row.total_seconds = rep.total_seconds;
    } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
    }
    return row;
}

/// Runs every model, possibly on a worker pool; rows come back in input
/// order regardless of completion order.
inline std::vector<ReportRow> run_batch(const std::vector<std::string>& paths,
                                        const RunConfig& cfg) {
    std::vector<ReportRow> rows(paths.size());
    int workers = std::clamp<int>(cfg.jobs, 1, std::max<int>(1, static_cast<int>(paths.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < paths.size(); ++i) rows[i] = run_model(paths[i], cfg);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= paths.size()) return;
                rows[i] = run_model(paths[i], cfg);
            }
        });
    }
    for (std::thread& t : pool) t.join();
    return rows;
}

namespace detail {

inline std::string format_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", s);
    return buf;
}

struct RowText {
    std::string cells[14];
};

inline RowText row_text(const ReportRow& r) {
    RowText t;
    t.cells[0] = r.model;
    t.cells[1] = std::to_string(r.m);
    t.cells[2] = std::to_string(r.n);
    const TestOutcome* tests[4] = {&r.iota, &r.mu, &r.eta, &r.gamma};
    for (int k = 0; k < 4; ++k) {
        t.cells[3 + 2 * k] = r.ok ? to_string(tests[k]->status) : "error";
        t.cells[4 + 2 * k] = format_seconds(tests[k]->seconds);
    }
    t.cells[11] = r.ok ? to_string(r.coset) : "error";
    t.cells[12] = r.ok ? to_string(r.group) : "error";
    t.cells[13] = format_seconds(r.total_seconds);
    return t;
}

inline const char* const kColumns[14] = {"model", "m",     "n",       "iota",  "t_iota",
                                         "mu",    "t_mu",  "eta",     "t_eta", "gamma",
                                         "t_gamma", "coset", "group", "t_total"};

}  // namespace detail

inline std::string emit(const std::vector<ReportRow>& rows, OutputFormat format) {
    std::ostringstream out;
    if (format == OutputFormat::csv) {
        for (int c = 0; c < 14; ++c) out << (c ? "," : "") << detail::kColumns[c];
        out << "\n";
        for (const ReportRow& r : rows) {
            detail::RowText t = detail::row_text(r);
            for (int c = 0; c < 14; ++c) out << (c ? "," : "") << t.cells[c];
            out << "\n";
        }
        return out.str();
    }
    if (format == OutputFormat::json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const ReportRow& r : rows) {
            nlohmann::ordered_json o;
            detail::RowText t = detail::row_text(r);
            o["model"] = r.model;
            o["m"] = r.m;
            o["n"] = r.n;
            const double times[4] = {r.iota.seconds, r.mu.seconds, r.eta.seconds,
                                     r.gamma.seconds};
            for (int k = 0; k < 4; ++k) {
                o[detail::kColumns[3 + 2 * k]] = t.cells[3 + 2 * k];
                o[detail::kColumns[4 + 2 * k]] = std::round(times[k] * 1000.0) / 1000.0;
            }
            o["coset"] = t.cells[11];
            o["group"] = t.cells[12];
            o["t_total"] = std::round(r.total_seconds * 1000.0) / 1000.0;
            if (!r.ok) o["error"] = r.error;
            arr.push_back(std::move(o));
        }
        return arr.dump(2) + "\n";
    }
    // aligned table
    std::size_t width[14];
    for (int c = 0; c < 14; ++c) width[c] = std::string(detail::kColumns[c]).size();
    std::vector<detail::RowText> texts;
    texts.reserve(rows.size());
    for (const ReportRow& r : rows) {
        texts.push_back(detail::row_text(r));
        for (int c = 0; c < 14; ++c) width[c] = std::max(width[c], texts.back().cells[c].size());
    }
    auto line = [&](auto cell) {
        for (int c = 0; c < 14; ++c) {
            std::string s = cell(c);
            out << s << std::string(width[c] - s.size(), ' ');
            out << (c == 13 ? "\n" : "  ");
        }
    };
    line([](int c) { return std::string(detail::kColumns[c]); });
    for (const detail::RowText& t : texts)
        line([&](int c) { return t.cells[c]; });
    return out.str();
}

/// Outcome of command-line parsing: either "proceed" (exit_code -1) with a
/// populated config and input list, or an early exit with a message.
struct CliParse {
    int exit_code = -1;
    std::string message;
    RunConfig config;
    std::vector<std::string> paths;
};

inline CliParse parse_args(const std::vector<std::string>& args) {
    CliParse result;
    CLI::App app{"decides whether the non-zero-coordinate points of a variety form a "
                 "multiplicative group or a coset of one"};
    app.name("torictest");

    std::string order = "grevlex";
    std::string format = "table";
    std::string manifest;
    RunConfig& cfg = result.config;

    app.add_option("--char", cfg.characteristic, "field characteristic (0 or a prime)")
        ->capture_default_str();
    app.add_option("--order", order, "monomial order")
        ->check(CLI::IsMember({"lex", "grevlex"}))
        ->capture_default_str();
    app.add_option("--test-timeout", cfg.test_timeout,
                   "budget per sub-test in seconds (0 = unlimited)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--model-timeout", cfg.model_timeout,
                   "budget per model in seconds (0 = unlimited)")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--fail-fast", cfg.fail_fast,
                 "skip remaining sub-tests once the verdicts are decided");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "parallel worker count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--output", cfg.output_path, "write the report to a file instead of stdout");
    app.add_option("--manifest", manifest, "file listing input paths, one per line");
    std::vector<std::string> files;
    app.add_option("files", files, ".poly input files");

    std::vector<const char*> argv;
    argv.push_back("torictest");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        result.exit_code = 0;
        result.message = app.help();
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = 2;
        result.message = std::string(e.what()) + "\n\n" + app.help();
        return result;
    }

    try {
        FieldSpec check(cfg.characteristic);
    } catch (const std::exception& e) {
        result.exit_code = 2;
        result.message = std::string(e.what()) + "\n\n" + app.help();
        return result;
    }
    cfg.order = order == "lex" ? OrderKind::lex : OrderKind::grevlex;
    cfg.format = format == "csv"    ? OutputFormat::csv
                 : format == "json" ? OutputFormat::json
                                    : OutputFormat::table;

    result.paths = std::move(files);
    if (!manifest.empty()) {
        std::ifstream in(manifest);
        if (!in) {
            result.exit_code = 2;
            result.message = "cannot open manifest: " + manifest + "\n";
            return result;
        }
        std::filesystem::path base = std::filesystem::path(manifest).parent_path();
        std::string line;
        while (std::getline(in, line)) {
            std::string body = line.substr(0, line.find('#'));
            std::size_t a = body.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            std::size_t b = body.find_last_not_of(" \t\r");
            std::filesystem::path p(body.substr(a, b - a + 1));
            if (p.is_relative() && !base.empty()) p = base / p;
            result.paths.push_back(p.string());
        }
    }
    if (result.paths.empty()) {
        result.exit_code = 2;
        result.message = "no input files\n\n" + app.help();
        return result;
    }
    return result;
}

/// Whole CLI entry point: parse, run, emit, map outcomes to the exit code
/// (0 = all complete, 1 = some model timed out, 2 = usage or load errors).
inline int run_cli(int argc, const char* const* argv) {
    CliParse parsed = parse_args(std::vector<std::string>(argv + 1, argv + argc));
    if (parsed.exit_code >= 0) {
        (parsed.exit_code == 0 ? std::cout : std::cerr) << parsed.message;
        return parsed.exit_code;
    }
    std::vector<ReportRow> rows = run_batch(parsed.paths, parsed.config);
    std::string text = emit(rows, parsed.config.format);
    if (!parsed.config.output_path.empty()) {
        std::ofstream out(parsed.config.output_path);
        if (!out) {
            std::cerr << "cannot write " << parsed.config.output_path << "\n";
            return 2;
        }
        out << text;
    } else {
        std::cout << text;
    }
    bool any_error = false, any_timeout = false;
    for (const ReportRow& r : rows) {
        any_error = any_error || !r.ok;
        any_timeout = any_timeout || r.timed_out();
    }
    return any_error ? 2 : any_timeout ? 1 : 0;
}

}  // namespace toric

#endif  // TORIC_HARNESS_HPP
