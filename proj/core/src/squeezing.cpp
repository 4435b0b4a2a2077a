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

#include "trisqueeze/squeezing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "trisqueeze/error.hpp"

namespace trisqueeze {

namespace {

cplx expect(const DensityMatrix &rho, const ComplexMatrix &op) {
    cplx sum = 0.0;
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            const cplx o = op(c, r);
            if (o != cplx{}) sum += rho(r, c) * o;
        }
    }
    return sum;
}

struct LadderOps {
    std::array<ComplexMatrix, 3> lower{ComplexMatrix::zeros(8), ComplexMatrix::zeros(8), ComplexMatrix::zeros(8)};
    std::array<ComplexMatrix, 3> raise{ComplexMatrix::zeros(8), ComplexMatrix::zeros(8), ComplexMatrix::zeros(8)};

    LadderOps() {
        for (Mode m : kAllModes) {
            lower[index_of(m)] = mode_operator(m, Ladder::lower);
            raise[index_of(m)] = mode_operator(m, Ladder::raise);
        }
    }
};

const LadderOps &ladder_ops() {
    static const LadderOps ops;
    return ops;
}

// Phase-independent pieces of the quadrature X_theta. The rotated operator
// is assembled entrywise for each phase and traced against rho.
class QuadratureOperators {
   public:
    explicit QuadratureOperators(ModeSet modes) : mode_count_(static_cast<double>(modes.size())) {
        if (modes.size() != 2 && modes.size() != 3) throw ContractViolation("quadrature needs two or three modes");
        const LadderOps &ops = ladder_ops();
        for (Mode m : modes.modes()) a_ += ops.lower[index_of(m)];
        a_dag_ = a_.adjoint();
        a_sq_ = a_ * a_;
        a_dag_sq_ = a_dag_ * a_dag_;
        number_ = a_dag_ * a_;
    }

    double variance(const DensityMatrix &rho, double theta) const {
        const cplx rot = std::polar(1.0, -theta);
        const cplx rot2 = rot * rot;
        cplx mean = 0.0;
        cplx second = 0.0;
        for (std::size_t r = 0; r < 8; ++r) {
            for (std::size_t c = 0; c < 8; ++c) {
                const cplx quad = rot * a_(c, r) + std::conj(rot) * a_dag_(c, r);
                const cplx normal_square = rot2 * a_sq_(c, r) + std::conj(rot2) * a_dag_sq_(c, r) + 2.0 * number_(c, r);
                mean += rho(r, c) * quad;
                second += rho(r, c) * normal_square;
            }
        }
        return mode_count_ + second.real() - mean.real() * mean.real();
    }

   private:
    double mode_count_;
    ComplexMatrix a_ = ComplexMatrix::zeros(8);
    ComplexMatrix a_dag_ = ComplexMatrix::zeros(8);
    ComplexMatrix a_sq_ = ComplexMatrix::zeros(8);
    ComplexMatrix a_dag_sq_ = ComplexMatrix::zeros(8);
    ComplexMatrix number_ = ComplexMatrix::zeros(8);
};

// Closed forms on the canonical (pivot i) supports. `p` holds the family
// probabilities in support order. Results are {ij, ik, jk, ijk}.
using Lambdas = std::array<double, 4>;

Lambdas closed_iii_0(const std::vector<double> &p) {
    const double p111 = p[1];
    const double two = 2.0 + 4.0 * p111;
    return {two, two, two, 3.0 + 6.0 * p111};
}

Lambdas closed_iii_1a(const std::vector<double> &p) {
    const double p000 = p[0], p100 = p[1], p111 = p[2];
    const double ij = 2.0 * (1.0 + p100 + 2.0 * p111 - 2.0 * p000 * p100);
    const double jk = 2.0 * (1.0 + 2.0 * p111 - 2.0 * std::sqrt(p100 * p111));
    const double ijk = 3.0 + 2.0 * (p100 - p000 * p100 + 3.0 * p111) -
                       2.0 * std::abs(2.0 * std::sqrt(p100 * p111) - p000 * p100);
    return {ij, ij, jk, ijk};
}

Lambdas closed_iii_1b(const std::vector<double> &p) {
    const double p000 = p[0], p011 = p[1], p111 = p[2];
    const double ij = 2.0 * (1.0 + p011 + 2.0 * p111 - 2.0 * p011 * p111);
    const double jk = 2.0 * (1.0 + 2.0 * p011 + 2.0 * p111 - 2.0 * std::sqrt(p000 * p011));
    // The linear term carries 2 P_011; the moment evaluation fixes the coefficient.
    const double ijk = 3.0 + 2.0 * (2.0 * p011 - p011 * p111 + 3.0 * p111) -
                       2.0 * std::abs(2.0 * std::sqrt(p000 * p011) - p011 * p111);
    return {ij, ij, jk, ijk};
}

Lambdas closed_iii_2(const std::vector<double> &p) {
    // Support {000, 001, 101, 111}: pairs ij and ik entangled, jk not.
    const double p000 = p[0], p001 = p[1], p101 = p[2], p111 = p[3];
    const double s_001_111 = std::sqrt(p001 * p111);
    const double s_000_101 = std::sqrt(p000 * p101);
    const double s_all = std::sqrt(p000 * p001 * p101 * p111);

    const double ij = 2.0 * (1.0 + p101 - p001 * p101 + 2.0 * p111 - p101 * p111 - 2.0 * s_001_111 * p101 -
                             std::abs(2.0 * (s_001_111 * (1.0 - p101)) - p001 * p101 - p101 * p111));
    const double ik = 2.0 * (1.0 + p001 - p000 * p001 + 2.0 * p101 + 2.0 * p111 - p001 * p101 -
                             2.0 * s_000_101 * p001 -
                             std::abs(2.0 * (s_000_101 * (1.0 - p001)) - p000 * p001 - p001 * p101));
    const double jk = 2.0 * (1.0 + p001 - 2.0 * p000 * p001 + p101 + 2.0 * p111 - 2.0 * p101 * p111 - 4.0 * s_all);
    const double ijk =
        3.0 + 2.0 * (p001 - p000 * p001 + 2.0 * p101 - p001 * p101 + 3.0 * p111 - p101 * p111) -
        4.0 * (s_000_101 * p001 + s_all + s_001_111 * p101) -
        2.0 * std::abs(2.0 * (s_000_101 - s_000_101 * p001 + s_001_111 - s_all - s_001_111 * p101) - p000 * p001 -
                       p001 * p101 - p101 * p111);
    return {ij, ik, jk, ijk};
}

Lambdas closed_iii_3(const std::vector<double> &p) {
    const double p000 = p[0], p101 = p[1], p110 = p[2];
    const double ij = 2.0 * (1.0 + p101 + 2.0 * p110 - 2.0 * std::sqrt(p000 * p110));
    const double ik = 2.0 * (1.0 + p110 + 2.0 * p101 - 2.0 * std::sqrt(p000 * p101));
    const double jk = 2.0 * (1.0 + p101 + p110 + 2.0 * std::sqrt(p101 * p110));
    const double ijk = 3.0 + 2.0 * (2.0 * p101 + 2.0 * p110) -
                       4.0 * (std::sqrt(p000 * p101) + std::sqrt(p000 * p110)) + 4.0 * std::sqrt(p101 * p110);
    return {ij, ik, jk, ijk};
}

Mode swap_if(Mode m, Mode a, Mode b) {
    if (m == a) return b;
    if (m == b) return a;
    return m;
}

}  // namespace

cplx MomentTable::central_nd(Mode m, Mode n) const {
    if (m == n) return number[index_of(m)] - std::norm(mean_a[index_of(m)]);
    const cplx raw = index_of(m) < index_of(n) ? cross_nd[pair_index(m, n)] : std::conj(cross_nd[pair_index(m, n)]);
    return raw - std::conj(mean_a[index_of(m)]) * mean_a[index_of(n)];
}

cplx MomentTable::central_aa(Mode m, Mode n) const {
    const cplx raw = m == n ? square[index_of(m)] : cross_aa[pair_index(m, n)];
    return raw - mean_a[index_of(m)] * mean_a[index_of(n)];
}

double SqueezeReport::pair(Mode a, Mode b) const {
    switch (pair_index(a, b)) {
        case 0:
            return lambda_ij;
        case 1:
            return lambda_ik;
        default:
            return lambda_jk;
    }
}

double &SqueezeReport::pair(Mode a, Mode b) {
    switch (pair_index(a, b)) {
        case 0:
            return lambda_ij;
        case 1:
            return lambda_ik;
        default:
            return lambda_jk;
    }
}

MomentTable compute_moments(const DensityMatrix &rho) {
    const LadderOps &ops = ladder_ops();
    MomentTable t;
    for (Mode m : kAllModes) {
        const std::size_t mi = index_of(m);
        t.mean_a[mi] = expect(rho, ops.lower[mi]);
        t.number[mi] = expect(rho, ops.raise[mi] * ops.lower[mi]).real();
        t.square[mi] = expect(rho, ops.lower[mi] * ops.lower[mi]);
    }
    for (std::size_t pair = 0; pair < 3; ++pair) {
        const auto [m, n] = pair_modes(pair);
        t.cross_nd[pair] = expect(rho, ops.raise[index_of(m)] * ops.lower[index_of(n)]);
        t.cross_aa[pair] = expect(rho, ops.lower[index_of(m)] * ops.lower[index_of(n)]);
    }
    for (const cplx &sq : t.square) {
        if (sq != cplx{}) throw ContractViolation("truncated ladder operator squared to a nonzero expectation");
    }
    return t;
}

double lambda_two_mode(const MomentTable &t, Mode a, Mode b) {
    (void)pair_index(a, b);
    const double linear = t.central_nd(a, a).real() + t.central_nd(b, b).real() + 2.0 * t.central_nd(a, b).real();
    const cplx anomalous = t.central_aa(a, a) + t.central_aa(b, b) + 2.0 * t.central_aa(a, b);
    return 2.0 * (1.0 + linear - std::abs(anomalous));
}

double lambda_three_mode(const MomentTable &t) {
    double diag = 0.0;
    cplx anomalous = 0.0;
    for (Mode m : kAllModes) {
        diag += t.central_nd(m, m).real();
        anomalous += t.central_aa(m, m);
    }
    double off = 0.0;
    for (std::size_t pair = 0; pair < 3; ++pair) {
        const auto [m, n] = pair_modes(pair);
        off += t.central_nd(m, n).real();
        anomalous += 2.0 * t.central_aa(m, n);
    }
    return 3.0 + 2.0 * diag + 4.0 * off - 2.0 * std::abs(anomalous);
}

SqueezeReport squeeze_report(const DensityMatrix &rho) {
    SqueezeReport r;
    const MomentTable t = compute_moments(rho);
    r.lambda_ij = lambda_two_mode(t, Mode::i, Mode::j);
    r.lambda_ik = lambda_two_mode(t, Mode::i, Mode::k);
    r.lambda_jk = lambda_two_mode(t, Mode::j, Mode::k);
    r.lambda_ijk = lambda_three_mode(t);
    r.moments = t;
    return r;
}

bool has_closed_form(const FamilySpec &spec) {
    if (spec.family == Family::General) return false;
    return std::all_of(spec.amplitudes.begin(), spec.amplitudes.end(),
                       [](const cplx &a) { return a.imag() == 0.0 && a.real() >= 0.0; });
}

SqueezeReport lambda_closed_form(const FamilySpec &spec) {
    if (spec.family == Family::General) throw UnsupportedFamily("no closed form for GENERAL states");
    validate(spec);
    for (const cplx &a : spec.amplitudes) {
        if (a.imag() != 0.0 || a.real() < 0.0) {
            throw UnsupportedRegime("closed forms require nonnegative real amplitudes");
        }
    }
    const std::vector<double> p = spec.probabilities();
    Lambdas canonical{};
    switch (spec.family) {
        case Family::III_0:
            canonical = closed_iii_0(p);
            break;
        case Family::III_1A:
            canonical = closed_iii_1a(p);
            break;
        case Family::III_1B:
            canonical = closed_iii_1b(p);
            break;
        case Family::III_2:
            canonical = closed_iii_2(p);
            break;
        case Family::III_3:
            canonical = closed_iii_3(p);
            break;
        case Family::General:
            break;
    }

    // The actual state is the canonical one with modes i and pivot swapped.
    SqueezeReport canon;
    canon.lambda_ij = canonical[0];
    canon.lambda_ik = canonical[1];
    canon.lambda_jk = canonical[2];
    SqueezeReport out;
    out.lambda_ijk = canonical[3];
    for (std::size_t pair = 0; pair < 3; ++pair) {
        const auto [a, b] = pair_modes(pair);
        out.pair(a, b) = canon.pair(swap_if(a, Mode::i, spec.pivot), swap_if(b, Mode::i, spec.pivot));
    }
    return out;
}

double quadrature_variance(const DensityMatrix &rho, ModeSet modes, double theta) {
    return QuadratureOperators(modes).variance(rho, theta);
}

double uncertainty_product(const DensityMatrix &rho, ModeSet modes, double theta) {
    return quadrature_variance(rho, modes, theta) * quadrature_variance(rho, modes, theta + std::numbers::pi / 2.0);
}

PhaseMinimum quadrature_phase_minimum(const DensityMatrix &rho, ModeSet modes, int phase_steps) {
    if (modes.size() != 2 && modes.size() != 3) throw ContractViolation("quadrature needs two or three modes");
    if (phase_steps < 3) throw ContractViolation("phase_steps must be at least 3");
    const double step = std::numbers::pi / phase_steps;
    const QuadratureOperators ops(modes);
    auto variance = [&](double theta) { return ops.variance(rho, theta); };

    int best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (int n = 0; n < phase_steps; ++n) {
        const double v = variance(n * step);
        if (v < best_value) {
            best_value = v;
            best = n;
        }
    }

    // The variance is pi-periodic, so the bracket may wrap past 0.
    double lo = (best - 1) * step;
    double hi = (best + 1) * step;
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = variance(x1);
    double f2 = variance(x2);
    while (hi - lo > 1e-12) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = variance(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = variance(x2);
        }
    }
    PhaseMinimum out{best * step, best_value};
    if (f1 < out.variance) out = {x1, f1};
    if (f2 < out.variance) out = {x2, f2};
    return out;
}

double quadrature_variance_scan(const DensityMatrix &rho, ModeSet modes, int phase_steps) {
    return quadrature_phase_minimum(rho, modes, phase_steps).variance;
}

}  // namespace trisqueeze
