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

#include "trisqueeze/analysis.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "trisqueeze/error.hpp"
#include "trisqueeze/extremum.hpp"

namespace trisqueeze {

namespace {

constexpr std::size_t kTableExtremumResolution = 41;

std::vector<FamilySpec> ensemble(Family f, const SamplerConfig &cfg, std::size_t boundary_points, Mode pivot,
                                 std::size_t &samples) {
    std::vector<FamilySpec> specs = sample_family(f, cfg, pivot);
    samples = specs.size();
    if (boundary_points > 0 && f != Family::General) {
        auto edge = boundary_states(f, boundary_points, pivot);
        specs.insert(specs.end(), edge.begin(), edge.end());
    }
    return specs;
}

// Lazily evaluated quantities of a single state.
class LazyState {
   public:
    explicit LazyState(const FamilySpec &spec) : rho_(DensityMatrix::from_pure(build_state(spec))) {}

    double get(Quantity q) {
        if (is_squeeze_variance(q)) {
            if (!squeeze_) squeeze_ = squeeze_report(rho_);
            return value_of(EntanglementReport{}, *squeeze_, q);
        }
        auto &slot = cache_[static_cast<std::size_t>(q)];
        if (!slot) {
            if (q == Quantity::N_ijk) {
                slot = std::cbrt(get(Quantity::N_i_jk) * get(Quantity::N_j_ik) * get(Quantity::N_k_ij));
            } else {
                switch (q) {
                    case Quantity::N_ij: slot = negativity_pair(rho_, Mode::i, Mode::j); break;
                    case Quantity::N_ik: slot = negativity_pair(rho_, Mode::i, Mode::k); break;
                    case Quantity::N_jk: slot = negativity_pair(rho_, Mode::j, Mode::k); break;
                    case Quantity::N_i_jk: slot = negativity_bipartition(rho_, Mode::i); break;
                    case Quantity::N_j_ik: slot = negativity_bipartition(rho_, Mode::j); break;
                    default: slot = negativity_bipartition(rho_, Mode::k); break;
                }
            }
        }
        return *slot;
    }

   private:
    DensityMatrix rho_;
    std::optional<SqueezeReport> squeeze_;
    std::array<std::optional<double>, 7> cache_;
};

bool row_holds(Quantity q, double value, double epsilon) {
    return is_squeeze_variance(q) ? is_squeezed(q, value) : value > epsilon;
}

}  // namespace

bool is_squeezed(Quantity q, double value) { return value < standard_quantum_limit(q) - kSqueezeMargin; }

ThresholdResult squeeze_threshold(Family f, const SamplerConfig &cfg, std::size_t boundary_points, Mode pivot) {
    ThresholdResult result;
    result.family = f;
    const std::vector<FamilySpec> specs = ensemble(f, cfg, boundary_points, pivot, result.samples);
    result.boundary_states = specs.size() - result.samples;
    for (const FamilySpec &spec : specs) {
        LazyState state(spec);
        if (!is_squeezed(Quantity::lambda_ijk, state.get(Quantity::lambda_ijk))) continue;
        ++result.squeezed_states;
        const double n = state.get(Quantity::N_ijk);
        if (!result.found || n > result.threshold) {
            result.found = true;
            result.threshold = n;
            result.witness = spec;
        }
    }
    return result;
}

std::string to_json(const ThresholdResult &result) {
    nlohmann::ordered_json j;
    j["family"] = std::string(to_string(result.family));
    j["threshold"] = result.threshold;
    j["found"] = result.found;
    j["samples"] = result.samples;
    j["boundary_states"] = result.boundary_states;
    j["squeezed_states"] = result.squeezed_states;
    j["witness"] = result.witness ? nlohmann::ordered_json::parse(to_json(*result.witness)) : nlohmann::ordered_json();
    return j.dump(2);
}

TableOneResult table_one(const SamplerConfig &cfg, double epsilon, std::size_t boundary_points) {
    TableOneResult result;
    for (std::size_t col = 0; col < kParametricFamilies.size(); ++col) {
        const Family f = kParametricFamilies[col];
        SamplerConfig family_cfg = cfg;
        if (family_cfg.count == 0) family_cfg.count = default_sample_count(f);
        std::size_t samples = 0;
        const std::vector<FamilySpec> specs = ensemble(f, family_cfg, boundary_points, Mode::i, samples);

        std::size_t open = kTableOneRows.size();
        for (const FamilySpec &spec : specs) {
            if (open == 0) break;
            LazyState state(spec);
            for (std::size_t row = 0; row < kTableOneRows.size(); ++row) {
                if (result.cells[row][col]) continue;
                const Quantity q = kTableOneRows[row];
                if (!row_holds(q, state.get(q), epsilon)) continue;
                if (state.get(Quantity::N_ijk) <= epsilon) continue;
                result.cells[row][col] = true;
                result.witnesses[row][col] = spec;
                --open;
            }
        }

        for (std::size_t row = 0; row < kTableOneRows.size() && open > 0; ++row) {
            if (result.cells[row][col]) continue;
            const Quantity q = kTableOneRows[row];
            const Goal goal = is_squeeze_variance(q) ? Goal::Minimize : Goal::Maximize;
            const ExtremumResult ext = find_extremum(f, q, goal, {}, kTableExtremumResolution);
            LazyState state(ext.arg);
            if (row_holds(q, ext.value, epsilon) && state.get(Quantity::N_ijk) > epsilon) {
                result.cells[row][col] = true;
                result.witnesses[row][col] = ext.arg;
                --open;
            }
        }
    }
    return result;
}

const TableOne &expected_table_one() {
    static const TableOne table = {{
        {false, false, false, true, true},   // N_ij
        {false, true, true, false, true},    // N_jk
        {false, false, false, true, true},   // N_ik
        {true, true, true, true, true},      // N_ijk
        {false, true, false, true, true},    // lambda_ij < 2
        {false, true, true, true, false},    // lambda_jk < 2
        {false, true, false, true, true},    // lambda_ik < 2
        {false, true, true, true, true},     // lambda_ijk < 3
    }};
    return table;
}

std::size_t matching_cells(const TableOne &a, const TableOne &b) {
    std::size_t n = 0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a[r].size(); ++c) n += a[r][c] == b[r][c] ? 1 : 0;
    }
    return n;
}

std::string format_table_one(const TableOne &table) {
    std::ostringstream os;
    os << "row";
    for (Family f : kParametricFamilies) os << ',' << to_string(f);
    os << '\n';
    for (std::size_t r = 0; r < kTableOneRows.size(); ++r) {
        os << column_name(kTableOneRows[r]);
        for (bool cell : table[r]) os << ',' << (cell ? "yes" : "no");
        os << '\n';
    }
    return os.str();
}

}  // namespace trisqueeze
