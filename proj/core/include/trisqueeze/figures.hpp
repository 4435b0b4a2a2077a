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

#ifndef TRISQUEEZE_FIGURES_HPP
#define TRISQUEEZE_FIGURES_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trisqueeze/scan.hpp"
#include "trisqueeze/state.hpp"

namespace trisqueeze {

// clang-format off
enum class FigureId {
    F2,
    F3a, F3b, F3c, F3d, F3e,
    F4a, F4b, F4c, F4d, F4e,
    F5,
    F6a, F6b,
    F7a, F7b, F7c, F7d, F7e, F7f, F7g,
    F8a, F8b,
    F9a, F9b, F9c, F9d, F9e, F9f,
};
// clang-format on

std::string_view to_string(FigureId id);
std::optional<FigureId> parse_figure(std::string_view text);
std::span<const FigureId> all_figures();

/// What a panel plots: y against x over one or more families.
struct FigurePanel {
    FigureId id = FigureId::F2;
    std::vector<Family> families;
    Quantity x = Quantity::N_ijk;
    Quantity y = Quantity::lambda_ijk;
};

FigurePanel figure_panel(FigureId id);

struct CurvePoint {
    double parameter = 0.0;
    double x = 0.0;
    double y = 0.0;
};

/// (x, y) along one boundary edge. The parameter is the probability of the
/// first free slot and increases strictly.
struct BoundaryCurve {
    Family family = Family::General;
    Mode pivot = Mode::i;
    std::vector<std::size_t> zero_slots;
    std::vector<CurvePoint> samples;

    /// "P000=0", "P000=0,P111=0", or "none" for III_0.
    std::string constraint() const;
};

BoundaryCurve boundary_curve(Family f, std::span<const std::size_t> zero_slots, Quantity x, Quantity y,
                             std::size_t points = 1000, Mode pivot = Mode::i);

/// The curve's state at parameter t, evaluated exactly.
CurvePoint curve_point(const BoundaryCurve &curve, Quantity x, Quantity y, double t);

struct FigureOutput {
    std::filesystem::path scatter;
    std::vector<std::filesystem::path> curves;
    std::filesystem::path manifest;
};

struct FigureOptions {
    double epsilon = kZeroNegativity;
    std::size_t curve_points = 1000;
    unsigned threads = 0;
};

/// Writes scatter.csv, one curve_*.csv per boundary edge of every plotted
/// family, and manifest.json into `out_dir`. `cfg.count == 0` uses the
/// family default.
FigureOutput figure_dataset(FigureId id, const SamplerConfig &cfg, const std::filesystem::path &out_dir,
                            const FigureOptions &options = {});

}  // namespace trisqueeze

#endif  // TRISQUEEZE_FIGURES_HPP
