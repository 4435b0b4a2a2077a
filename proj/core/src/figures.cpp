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

#include "trisqueeze/figures.hpp"

#include <algorithm>
#include <array>
#include <nlohmann/json.hpp>

#include "trisqueeze/csv.hpp"
#include "trisqueeze/error.hpp"
#include "trisqueeze/version.hpp"

namespace trisqueeze {

namespace {

using Q = Quantity;
using F = Family;

struct PanelRow {
    FigureId id;
    std::string_view name;
    std::array<Family, 2> families;
    std::size_t family_count;
    Quantity x;
    Quantity y;
};

// clang-format off
constexpr std::array<PanelRow, 29> kPanels = {{
    {FigureId::F2,  "F2",  {F::III_0,  F::III_0}, 1, Q::N_ijk,     Q::lambda_ijk},
    {FigureId::F3a, "F3a", {F::III_1A, F::III_1A}, 1, Q::N_jk,      Q::lambda_jk},
    {FigureId::F3b, "F3b", {F::III_1A, F::III_1A}, 1, Q::lambda_ij, Q::lambda_jk},
    {FigureId::F3c, "F3c", {F::III_1A, F::III_1A}, 1, Q::N_ijk,     Q::lambda_ijk},
    {FigureId::F3d, "F3d", {F::III_1A, F::III_1A}, 1, Q::lambda_jk, Q::lambda_ijk},
    {FigureId::F3e, "F3e", {F::III_1A, F::III_1A}, 1, Q::lambda_ij, Q::lambda_ijk},
    {FigureId::F4a, "F4a", {F::III_1B, F::III_1B}, 1, Q::N_jk,      Q::lambda_jk},
    {FigureId::F4b, "F4b", {F::III_1B, F::III_1B}, 1, Q::lambda_ij, Q::lambda_jk},
    {FigureId::F4c, "F4c", {F::III_1B, F::III_1B}, 1, Q::N_ijk,     Q::lambda_ijk},
    {FigureId::F4d, "F4d", {F::III_1B, F::III_1B}, 1, Q::lambda_jk, Q::lambda_ijk},
    {FigureId::F4e, "F4e", {F::III_1B, F::III_1B}, 1, Q::lambda_ij, Q::lambda_ijk},
    {FigureId::F5,  "F5",  {F::III_1A, F::III_1B}, 2, Q::N_jk,      Q::N_ijk},
    {FigureId::F6a, "F6a", {F::III_2,  F::III_2}, 1, Q::N_ij,      Q::N_ijk},
    {FigureId::F6b, "F6b", {F::III_2,  F::III_2}, 1, Q::N_ik,      Q::N_ijk},
    {FigureId::F7a, "F7a", {F::III_2,  F::III_2}, 1, Q::N_ij,      Q::lambda_ij},
    {FigureId::F7b, "F7b", {F::III_2,  F::III_2}, 1, Q::lambda_ij, Q::lambda_jk},
    {FigureId::F7c, "F7c", {F::III_2,  F::III_2}, 1, Q::lambda_ik, Q::lambda_jk},
    {FigureId::F7d, "F7d", {F::III_2,  F::III_2}, 1, Q::N_ijk,     Q::lambda_ijk},
    {FigureId::F7e, "F7e", {F::III_2,  F::III_2}, 1, Q::lambda_ij, Q::lambda_ijk},
    {FigureId::F7f, "F7f", {F::III_2,  F::III_2}, 1, Q::lambda_jk, Q::lambda_ijk},
    {FigureId::F7g, "F7g", {F::III_2,  F::III_2}, 1, Q::lambda_ik, Q::lambda_ijk},
    {FigureId::F8a, "F8a", {F::III_3,  F::III_3}, 1, Q::N_ij,      Q::N_ijk},
    {FigureId::F8b, "F8b", {F::III_3,  F::III_3}, 1, Q::N_jk,      Q::N_ijk},
    {FigureId::F9a, "F9a", {F::III_3,  F::III_3}, 1, Q::N_ij,      Q::lambda_ij},
    {FigureId::F9b, "F9b", {F::III_3,  F::III_3}, 1, Q::N_jk,      Q::lambda_jk},
    {FigureId::F9c, "F9c", {F::III_3,  F::III_3}, 1, Q::N_ik,      Q::lambda_ik},
    {FigureId::F9d, "F9d", {F::III_3,  F::III_3}, 1, Q::N_ijk,     Q::lambda_ijk},
    {FigureId::F9e, "F9e", {F::III_3,  F::III_3}, 1, Q::lambda_ij, Q::lambda_ijk},
    {FigureId::F9f, "F9f", {F::III_3,  F::III_3}, 1, Q::lambda_jk, Q::lambda_ijk},
}};
// clang-format on

constexpr std::array<FigureId, kPanels.size()> kAllFigures = [] {
    std::array<FigureId, kPanels.size()> out{};
    for (std::size_t n = 0; n < kPanels.size(); ++n) out[n] = kPanels[n].id;
    return out;
}();

const PanelRow &row_of(FigureId id) { return kPanels[static_cast<std::size_t>(id)]; }

std::vector<double> edge_probabilities(Family f, std::span<const std::size_t> zero_slots, double t) {
    const std::size_t n = amplitude_count(f);
    std::vector<double> p(n, 0.0);
    std::vector<std::size_t> free;
    for (std::size_t s = 0; s < n; ++s) {
        if (std::find(zero_slots.begin(), zero_slots.end(), s) == zero_slots.end()) free.push_back(s);
    }
    if (free.size() != 2) throw ContractViolation("an edge leaves exactly two free slots");
    p[free[0]] = t;
    p[free[1]] = 1.0 - t;
    return p;
}

std::string file_token(std::string text) {
    for (char &c : text) {
        if (c == '=') c = '_';
        if (c == ',') c = '-';
    }
    return text;
}

}  // namespace

std::string_view to_string(FigureId id) { return row_of(id).name; }

std::optional<FigureId> parse_figure(std::string_view text) {
    for (const PanelRow &row : kPanels) {
        if (row.name == text) return row.id;
    }
    return std::nullopt;
}

std::span<const FigureId> all_figures() { return kAllFigures; }

FigurePanel figure_panel(FigureId id) {
    const PanelRow &row = row_of(id);
    return FigurePanel{id, std::vector<Family>(row.families.begin(), row.families.begin() + row.family_count), row.x,
                       row.y};
}

std::string BoundaryCurve::constraint() const {
    if (zero_slots.empty()) return "none";
    const std::vector<unsigned> kets = support_kets(family, pivot);
    std::string out;
    for (std::size_t s : zero_slots) {
        if (!out.empty()) out += ',';
        out += "P" + ket_label(kets[s]) + "=0";
    }
    return out;
}

CurvePoint curve_point(const BoundaryCurve &curve, Quantity x, Quantity y, double t) {
    const FamilySpec spec =
        from_probabilities(curve.family, edge_probabilities(curve.family, curve.zero_slots, t), curve.pivot);
    return CurvePoint{t, evaluate_quantity(spec, x), evaluate_quantity(spec, y)};
}

BoundaryCurve boundary_curve(Family f, std::span<const std::size_t> zero_slots, Quantity x, Quantity y,
                             std::size_t points, Mode pivot) {
    if (points < 2) throw ContractViolation("a curve needs at least two points");
    BoundaryCurve curve;
    curve.family = f;
    curve.pivot = pivot;
    curve.zero_slots.assign(zero_slots.begin(), zero_slots.end());
    curve.samples.reserve(points);
    for (std::size_t m = 0; m < points; ++m) {
        const double t = static_cast<double>(m) / static_cast<double>(points - 1);
        curve.samples.push_back(curve_point(curve, x, y, t));
    }
    return curve;
}

FigureOutput figure_dataset(FigureId id, const SamplerConfig &cfg, const std::filesystem::path &out_dir,
                            const FigureOptions &options) {
    const FigurePanel panel = figure_panel(id);
    FigureOutput out;
    out.scatter = out_dir / "scatter.csv";
    out.manifest = out_dir / "manifest.json";

    std::string family_label;
    std::vector<std::size_t> counts;
    {
        std::ofstream os = open_output(out.scatter);
        write_csv_row(os, {"index", "family", std::string(column_name(panel.x)), std::string(column_name(panel.y))});
        std::size_t index = 0;
        for (Family f : panel.families) {
            if (!family_label.empty()) family_label += '+';
            family_label += to_string(f);
            SamplerConfig family_cfg = cfg;
            if (family_cfg.count == 0) family_cfg.count = default_sample_count(f);
            counts.push_back(family_cfg.count);
            const std::vector<FamilySpec> specs = sample_family(f, family_cfg);
            for (const ScanRecord &rec : evaluate_all(specs, options.epsilon, options.threads)) {
                write_csv_row(os, {std::to_string(index++), std::string(to_string(f)),
                                   format_double(value_of(rec, panel.x)), format_double(value_of(rec, panel.y))});
            }
        }
        os.flush();
        if (!os) throw IoError("write failed", out.scatter);
    }

    nlohmann::ordered_json constraints = nlohmann::ordered_json::array();
    for (Family f : panel.families) {
        for (const auto &edge : boundary_edges(f)) {
            const BoundaryCurve curve = boundary_curve(f, edge, panel.x, panel.y, options.curve_points);
            const std::filesystem::path path =
                out_dir / ("curve_" + std::string(to_string(f)) + "_" + file_token(curve.constraint()) + ".csv");
            std::ofstream os = open_output(path);
            write_csv_row(os, {"parameter", std::string(column_name(panel.x)), std::string(column_name(panel.y))});
            for (const CurvePoint &pt : curve.samples) {
                write_csv_row(os, {format_double(pt.parameter), format_double(pt.x), format_double(pt.y)});
            }
            os.flush();
            if (!os) throw IoError("write failed", path);
            out.curves.push_back(path);
            constraints.push_back({{"family", std::string(to_string(f))},
                                   {"constraint", curve.constraint()},
                                   {"file", path.filename().string()}});
        }
    }

    nlohmann::ordered_json manifest;
    manifest["figure"] = std::string(to_string(id));
    manifest["family"] = family_label;
    manifest["seed"] = cfg.seed;
    manifest["count"] = counts.size() == 1 ? nlohmann::ordered_json(counts.front()) : nlohmann::ordered_json(counts);
    manifest["measure"] = std::string(to_string(cfg.measure));
    manifest["amplitude_mode"] = std::string(to_string(cfg.amplitude_mode));
    manifest["epsilon"] = options.epsilon;
    manifest["tool_version"] = std::string(version());
    manifest["x"] = std::string(column_name(panel.x));
    manifest["y"] = std::string(column_name(panel.y));
    manifest["scatter"] = out.scatter.filename().string();
    manifest["constraints"] = std::move(constraints);
    std::ofstream os = open_output(out.manifest);
    os << manifest.dump(2) << '\n';
    os.flush();
    if (!os) throw IoError("write failed", out.manifest);
    return out;
}

}  // namespace trisqueeze
