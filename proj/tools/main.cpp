// Copyright 2026 The trisqueeze Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "trisqueeze/acceptance.hpp"
#include "trisqueeze/analysis.hpp"
#include "trisqueeze/csv.hpp"
#include "trisqueeze/error.hpp"
#include "trisqueeze/extremum.hpp"
#include "trisqueeze/figures.hpp"
#include "trisqueeze/scan.hpp"
#include "trisqueeze/version.hpp"

namespace {

using namespace trisqueeze;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::uint64_t seed = 20250101;
    std::size_t count = 0;
    std::string measure = "sphere";
    std::string amplitude_mode = "real_nonnegative";
    std::string out;
    double epsilon = kZeroNegativity;
    unsigned threads = 0;
};

template <typename T>
T require(std::optional<T> value, const std::string &what) {
    if (!value) throw UsageError("unknown " + what);
    return *value;
}

SamplerConfig sampler_config(const Globals &g, std::optional<Family> family) {
    SamplerConfig cfg;
    cfg.seed = g.seed;
    cfg.count = g.count;
    if (cfg.count == 0 && family) cfg.count = default_sample_count(*family);
    cfg.measure = require(parse_measure(g.measure), "measure: " + g.measure);
    cfg.amplitude_mode = require(parse_amplitude_mode(g.amplitude_mode), "amplitude mode: " + g.amplitude_mode);
    return cfg;
}

void emit(const Globals &g, const std::string &text) {
    std::cout << text << '\n';
    if (!g.out.empty()) {
        std::ofstream os = open_output(g.out);
        os << text << '\n';
        if (!os) throw IoError("write failed", g.out);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entanglement and squeezing of three-qubit states"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
    app.add_option("--count", g.count, "Samples per family (0 = family default)")->capture_default_str();
    app.add_option("--measure", g.measure, "sphere | simplex")->capture_default_str();
    app.add_option("--amplitude-mode", g.amplitude_mode, "real_nonnegative | real_signed | complex")
        ->capture_default_str();
    app.add_option("--out", g.out, "Output file (scan, extremum, threshold, table1, verify) or directory (figure)");
    app.add_option("--epsilon", g.epsilon, "Zero threshold for negativities")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();

    std::string family_name;
    std::string pivot_name = "i";
    std::size_t boundary_points = kBoundaryPoints;

    auto *scan = app.add_subcommand("scan", "Sample a family and write one CSV row per state");
    scan->add_option("--family", family_name, "III_0, III_1A, III_1B, III_2, III_3 or GENERAL")->required();
    scan->add_option("--pivot", pivot_name, "Distinguished mode of the family support")->capture_default_str();
    scan->add_option("--boundary-points", boundary_points, "States per boundary edge appended to the samples")
        ->capture_default_str();

    std::string figure_name;
    std::size_t curve_points = 1000;
    auto *figure = app.add_subcommand("figure", "Scatter and boundary-curve datasets for one figure panel");
    figure->add_option("--id", figure_name, "F2, F3a..F3e, F4a..F4e, F5, F6a, F6b, F7a..F7g, F8a, F8b, F9a..F9f")
        ->required();
    figure->add_option("--curve-points", curve_points, "Points per boundary curve")->capture_default_str();

    std::string objective_name;
    std::string goal_name = "min";
    std::vector<std::string> pins;
    std::size_t resolution = kDefaultResolution;
    auto *extremum = app.add_subcommand("extremum", "Grid plus golden-section extremum over a family");
    extremum->add_option("--family", family_name)->required();
    extremum->add_option("--objective", objective_name, "lambda_ij, ..., N_ijk")->required();
    extremum->add_option("--goal", goal_name, "min | max")->capture_default_str();
    extremum->add_option("--pin", pins, "Pinned probability, e.g. 000=0 (repeatable)");
    extremum->add_option("--resolution", resolution, "Grid points per angle")->capture_default_str();
    extremum->add_option("--pivot", pivot_name)->capture_default_str();

    auto *threshold = app.add_subcommand("threshold", "Largest N_ijk among three-mode squeezed states");
    threshold->add_option("--family", family_name)->required();
    threshold->add_option("--boundary-points", boundary_points)->capture_default_str();

    auto *table1 = app.add_subcommand("table1", "Presence of entanglement and squeezing per family");

    std::vector<std::string> overrides;
    std::vector<std::string> groups;
    auto *verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_option("--tolerance-override", overrides, "ID=TOLERANCE, replaces a criterion tolerance");
    verify->add_option("--group", groups, "Run only these criterion groups (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const Mode pivot = require(parse_mode(pivot_name), "pivot: " + pivot_name);
        auto family = [&] { return require(parse_family(family_name), "family: " + family_name); };

        if (*scan) {
            const Family f = family();
            ScanOptions options;
            options.epsilon = g.epsilon;
            options.boundary_points = boundary_points;
            options.threads = g.threads;
            options.pivot = pivot;
            const std::string out = g.out.empty() ? "scan_" + std::string(to_string(f)) + ".csv" : g.out;
            const ScanSummary summary = run_scan(f, sampler_config(g, f), out, options);
            std::cout << summary_json(summary) << '\n';
            return kExitOk;
        }
        if (*figure) {
            const FigureId id = require(parse_figure(figure_name), "figure id: " + figure_name);
            FigureOptions options;
            options.epsilon = g.epsilon;
            options.curve_points = curve_points;
            options.threads = g.threads;
            SamplerConfig cfg = sampler_config(g, std::nullopt);
            const std::string out = g.out.empty() ? "figures/" + std::string(to_string(id)) : g.out;
            const FigureOutput files = figure_dataset(id, cfg, out, options);
            std::cout << files.manifest.string() << '\n';
            return kExitOk;
        }
        if (*extremum) {
            const Family f = family();
            const Quantity q = require(parse_quantity(objective_name), "objective: " + objective_name);
            if (goal_name != "min" && goal_name != "max") throw UsageError("goal must be min or max");
            std::vector<PinnedProbability> constraints;
            for (const std::string &p : pins) constraints.push_back(parse_pin(f, p, pivot));
            const ExtremumResult r = find_extremum(f, q, goal_name == "min" ? Goal::Minimize : Goal::Maximize,
                                                   constraints, resolution, pivot);
            emit(g, to_json(r));
            return kExitOk;
        }
        if (*threshold) {
            const Family f = family();
            emit(g, to_json(squeeze_threshold(f, sampler_config(g, f), boundary_points, pivot)));
            return kExitOk;
        }
        if (*table1) {
            const TableOneResult t = table_one(sampler_config(g, std::nullopt), g.epsilon);
            emit(g, format_table_one(t.cells));
            const std::size_t match = matching_cells(t.cells, expected_table_one());
            std::cerr << match << "/40 cells match the reference\n";
            return kExitOk;
        }
        if (*verify) {
            AcceptanceOptions options;
            options.seed = g.seed;
            options.threads = g.threads;
            options.groups = groups;
            for (const std::string &o : overrides) {
                const auto eq = o.find('=');
                if (eq == std::string::npos) throw UsageError("override must look like ID=TOLERANCE");
                try {
                    options.tolerance_overrides[o.substr(0, eq)] = std::stod(o.substr(eq + 1));
                } catch (const std::logic_error &) {
                    throw UsageError("bad tolerance in override: " + o);
                }
            }
            options.on_result = [](const CriterionResult &r) { std::cout << format_result(r) << std::endl; };
            const std::vector<CriterionResult> results = run_acceptance(options);
            std::size_t passed = 0;
            for (const CriterionResult &r : results) passed += r.passed ? 1 : 0;
            std::cout << passed << '/' << results.size() << " criteria passed" << std::endl;
            if (!g.out.empty()) {
                std::ofstream os = open_output(g.out);
                os << json_report(results, g.seed) << '\n';
                if (!os) throw IoError("write failed", g.out);
            }
            return all_passed(results) ? kExitOk : kExitVerification;
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError &e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ClosedFormMismatch &e) {
        std::cerr << "verification error: " << e.what() << "\nstate: " << e.spec_json() << '\n';
        return kExitVerification;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
