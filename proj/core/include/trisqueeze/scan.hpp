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

#ifndef TRISQUEEZE_SCAN_HPP
#define TRISQUEEZE_SCAN_HPP

#include <array>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "trisqueeze/classify.hpp"
#include "trisqueeze/entanglement.hpp"
#include "trisqueeze/squeezing.hpp"
#include "trisqueeze/state.hpp"

namespace trisqueeze {

enum class Quantity { N_ij, N_ik, N_jk, N_i_jk, N_j_ik, N_k_ij, N_ijk, lambda_ij, lambda_ik, lambda_jk, lambda_ijk };

inline constexpr std::array<Quantity, 11> kAllQuantities = {
    Quantity::N_ij,      Quantity::N_ik,      Quantity::N_jk,      Quantity::N_i_jk,
    Quantity::N_j_ik,    Quantity::N_k_ij,    Quantity::N_ijk,     Quantity::lambda_ij,
    Quantity::lambda_ik, Quantity::lambda_jk, Quantity::lambda_ijk};

/// CSV column name: N_ij ... N_i-jk ... lambda_ijk.
std::string_view column_name(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view text);
bool is_squeeze_variance(Quantity q);
/// 2 for two-mode variances, 3 for lambda_ijk. ContractViolation for negativities.
double standard_quantum_limit(Quantity q);

struct ScanRecord {
    FamilySpec spec;
    EntanglementReport entanglement;
    SqueezeReport squeeze_numeric;
    std::optional<SqueezeReport> squeeze_closed;
    StateClass state_class;
};

inline constexpr double kClosedFormTolerance = 1e-9;

double value_of(const EntanglementReport &e, const SqueezeReport &s, Quantity q);
double value_of(const ScanRecord &record, Quantity q);

/// Largest |closed - numeric| over the four variances.
double closed_form_deviation(const SqueezeReport &closed, const SqueezeReport &numeric);

/// Full evaluation of one state. When a closed form applies it is computed
/// and checked; a deviation above kClosedFormTolerance throws
/// ClosedFormMismatch carrying the serialized spec.
ScanRecord evaluate(const FamilySpec &spec, double epsilon = kZeroNegativity);

/// Computes just the eigensolves `q` needs.
double evaluate_quantity(const FamilySpec &spec, Quantity q);

/// Evaluates in parallel; output order equals input order. threads == 0
/// means hardware concurrency. If several states fail, the lowest index wins.
std::vector<ScanRecord> evaluate_all(std::span<const FamilySpec> specs, double epsilon = kZeroNegativity,
                                     unsigned threads = 0);

/// Slot sets which, pinned to zero, leave exactly one free probability.
/// III_0 yields a single empty set (the family itself is one-dimensional).
/// GENERAL has none.
std::vector<std::vector<std::size_t>> boundary_edges(Family f);

/// States along one edge: the first free slot carries probability t and the
/// second 1 - t, with t running over `points` values from 0 to 1 inclusive.
std::vector<FamilySpec> edge_states(Family f, std::span<const std::size_t> zero_slots, std::size_t points,
                                    Mode pivot = Mode::i);

/// All boundary edges, `points_per_edge` states each.
std::vector<FamilySpec> boundary_states(Family f, std::size_t points_per_edge, Mode pivot = Mode::i);

struct ColumnRange {
    double min = 0.0;
    double max = 0.0;
};

struct ScanSummary {
    Family family = Family::General;
    std::size_t samples = 0;
    std::size_t boundary_states = 0;
    std::array<ColumnRange, kAllQuantities.size()> ranges{};

    const ColumnRange &range(Quantity q) const { return ranges[static_cast<std::size_t>(q)]; }
};

ScanSummary summarize(Family family, std::span<const ScanRecord> records, std::size_t samples);

struct ScanOptions {
    double epsilon = kZeroNegativity;
    /// Deterministic boundary grid appended after the samples; 0 disables it.
    std::size_t boundary_points = 1000;
    unsigned threads = 0;
    Mode pivot = Mode::i;
};

void write_scan_csv(std::ostream &os, Family family, std::span<const ScanRecord> records, std::size_t samples);

/// Samples, evaluates, writes one CSV row per state to `out`, returns min/max
/// of every column.
ScanSummary run_scan(Family family, const SamplerConfig &cfg, const std::filesystem::path &out,
                     const ScanOptions &options = {});

std::string summary_json(const ScanSummary &summary);

}  // namespace trisqueeze

#endif  // TRISQUEEZE_SCAN_HPP
