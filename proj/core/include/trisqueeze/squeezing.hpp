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

#ifndef TRISQUEEZE_SQUEEZING_HPP
#define TRISQUEEZE_SQUEEZING_HPP

#include <array>
#include <optional>

#include "trisqueeze/linalg.hpp"
#include "trisqueeze/state.hpp"

namespace trisqueeze {

inline constexpr double kTwoModeSql = 2.0;
inline constexpr double kThreeModeSql = 3.0;

/// Raw first and second moments of the truncated ladder operators.
/// Pair-indexed arrays use pair_index(): ij, ik, jk.
struct MomentTable {
    std::array<cplx, 3> mean_a{};    // <a_m>
    std::array<double, 3> number{};  // <a_m^dagger a_m>
    std::array<cplx, 3> cross_nd{};  // <a_m^dagger a_n>, m < n
    std::array<cplx, 3> square{};    // <a_m^2>, identically zero when truncated
    std::array<cplx, 3> cross_aa{};  // <a_m a_n>, m < n

    /// <Delta a_m^dagger Delta a_n> (any order, m == n allowed).
    cplx central_nd(Mode m, Mode n) const;
    /// <Delta a_m Delta a_n> (any order, m == n allowed).
    cplx central_aa(Mode m, Mode n) const;
};

struct SqueezeReport {
    double lambda_ij = 0.0;
    double lambda_ik = 0.0;
    double lambda_jk = 0.0;
    double lambda_ijk = 0.0;
    std::optional<MomentTable> moments;

    double pair(Mode a, Mode b) const;
    double &pair(Mode a, Mode b);
};

MomentTable compute_moments(const DensityMatrix &rho);

/// Two-mode principal squeeze variance; SQL is 2.
double lambda_two_mode(const MomentTable &moments, Mode a, Mode b);

/// Three-mode principal squeeze variance; SQL is 3.
double lambda_three_mode(const MomentTable &moments);

/// All four variances from the moment table.
SqueezeReport squeeze_report(const DensityMatrix &rho);

/// Family closed forms in the probabilities. Only for the parametric families
/// with nonnegative real amplitudes: throws UnsupportedFamily for GENERAL and
/// UnsupportedRegime for signed or complex amplitudes.
SqueezeReport lambda_closed_form(const FamilySpec &spec);

/// True when lambda_closed_form accepts `spec`.
bool has_closed_form(const FamilySpec &spec);

/// Variance of X_theta = sum_m (a_m e^{-i theta} + a_m^dagger e^{i theta}),
/// normal ordered plus one unit per mode, i.e. the normalization under which
/// the vacuum sits at the SQL.
double quadrature_variance(const DensityMatrix &rho, ModeSet modes, double theta);

/// Var(X_theta) * Var(X_{theta + pi/2}).
double uncertainty_product(const DensityMatrix &rho, ModeSet modes, double theta);

/// Minimum of quadrature_variance over a uniform grid of `phase_steps` phases
/// in [0, pi), refined by golden-section search in the best cell. Independent
/// route to the principal squeeze variance.
double quadrature_variance_scan(const DensityMatrix &rho, ModeSet modes, int phase_steps);

struct PhaseMinimum {
    double theta = 0.0;
    double variance = 0.0;
};

/// Same search as quadrature_variance_scan, also reporting the phase.
PhaseMinimum quadrature_phase_minimum(const DensityMatrix &rho, ModeSet modes, int phase_steps);

}  // namespace trisqueeze

#endif  // TRISQUEEZE_SQUEEZING_HPP
