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

#ifndef TRISQUEEZE_ANALYSIS_HPP
#define TRISQUEEZE_ANALYSIS_HPP

#include <array>
#include <optional>
#include <string>

#include "trisqueeze/scan.hpp"
#include "trisqueeze/state.hpp"

namespace trisqueeze {

/// A variance counts as squeezed only this far below its SQL.
inline constexpr double kSqueezeMargin = 1e-9;

bool is_squeezed(Quantity q, double value);

inline constexpr std::size_t kBoundaryPoints = 1000;

struct ThresholdResult {
    Family family = Family::General;
    double threshold = 0.0;
    /// False when no state with lambda_ijk < 3 turned up; threshold is then 0.
    bool found = false;
    std::optional<FamilySpec> witness;
    std::size_t samples = 0;
    std::size_t boundary_states = 0;
    std::size_t squeezed_states = 0;
};

/// Largest N_ijk among three-mode squeezed states, over the sampled ensemble
/// plus `boundary_points` states on every boundary edge.
ThresholdResult squeeze_threshold(Family f, const SamplerConfig &cfg, std::size_t boundary_points = kBoundaryPoints,
                                  Mode pivot = Mode::i);

std::string to_json(const ThresholdResult &result);

/// Row order: N_ij, N_jk, N_ik, N_ijk, lambda_ij, lambda_jk, lambda_ik, lambda_ijk.
inline constexpr std::array<Quantity, 8> kTableOneRows = {
    Quantity::N_ij,      Quantity::N_jk,      Quantity::N_ik,      Quantity::N_ijk,
    Quantity::lambda_ij, Quantity::lambda_jk, Quantity::lambda_ik, Quantity::lambda_ijk};

/// cells[row][column], columns in kParametricFamilies order.
using TableOne = std::array<std::array<bool, kParametricFamilies.size()>, kTableOneRows.size()>;

struct TableOneResult {
    TableOne cells{};
    /// A tripartite-entangled family member realizing each "yes" cell.
    std::array<std::array<std::optional<FamilySpec>, kParametricFamilies.size()>, kTableOneRows.size()> witnesses;
};

/// A cell is "yes" when some family member with N_ijk > epsilon has the row
/// negativity above epsilon (N rows) or the row variance squeezed (lambda
/// rows). Candidates: the sampled ensemble, the boundary grid, then an
/// extremum search for every cell still open. `cfg.count == 0` uses each
/// family's default sample count.
TableOneResult table_one(const SamplerConfig &cfg, double epsilon = kZeroNegativity,
                         std::size_t boundary_points = kBoundaryPoints);

/// The reference pattern the computed table is compared against.
const TableOne &expected_table_one();

std::size_t matching_cells(const TableOne &a, const TableOne &b);

std::string format_table_one(const TableOne &table);

}  // namespace trisqueeze

#endif  // TRISQUEEZE_ANALYSIS_HPP
