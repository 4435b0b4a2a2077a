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

#include "trisqueeze/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "trisqueeze/error.hpp"

namespace trisqueeze {

namespace {

constexpr double kJacobiOffDiagonal = 1e-14;
constexpr int kJacobiMaxSweeps = 100;

std::size_t dim_for(ModeSet modes) { return std::size_t{1} << modes.size(); }

ModeSet modes_for_dim(std::size_t dim) {
    switch (dim) {
        case 2:
            return ModeSet::leading(1);
        case 4:
            return ModeSet::leading(2);
        case 8:
            return ModeSet::leading(3);
        default:
            throw ContractViolation("matrix dimension must be 2, 4 or 8, got " + std::to_string(dim));
    }
}

double off_diagonal_norm(const ComplexMatrix &a) {
    double sum = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            if (r != c) sum += std::norm(a(r, c));
        }
    }
    return std::sqrt(sum);
}

}  // namespace

std::string_view to_string(Mode m) {
    switch (m) {
        case Mode::i:
            return "i";
        case Mode::j:
            return "j";
        case Mode::k:
            return "k";
    }
    return "?";
}

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "i") return Mode::i;
    if (text == "j") return Mode::j;
    if (text == "k") return Mode::k;
    return std::nullopt;
}

Mode third_mode(Mode a, Mode b) {
    if (a == b) throw ContractViolation("mode pair must contain two distinct modes");
    return static_cast<Mode>(3 - index_of(a) - index_of(b));
}

std::size_t pair_index(Mode a, Mode b) {
    // ij -> 0, ik -> 1, jk -> 2; the excluded mode is k, j, i respectively.
    return 2 - index_of(third_mode(a, b));
}

std::array<Mode, 2> pair_modes(std::size_t pair) {
    switch (pair) {
        case 0:
            return {Mode::i, Mode::j};
        case 1:
            return {Mode::i, Mode::k};
        case 2:
            return {Mode::j, Mode::k};
        default:
            throw ContractViolation("pair index out of range");
    }
}

ModeSet ModeSet::leading(std::size_t count) {
    ModeSet set;
    for (std::size_t n = 0; n < count && n < 3; ++n) set.bits_ |= static_cast<std::uint8_t>(1u << n);
    return set;
}

std::vector<Mode> ModeSet::modes() const {
    std::vector<Mode> out;
    for (Mode m : kAllModes) {
        if (contains(m)) out.push_back(m);
    }
    return out;
}

unsigned ModeSet::local_bit(Mode m) const {
    if (!contains(m)) throw ContractViolation("mode " + std::string(to_string(m)) + " is not spanned by the matrix");
    std::size_t later = 0;
    for (Mode other : kAllModes) {
        if (contains(other) && index_of(other) > index_of(m)) ++later;
    }
    return 1u << later;
}

ComplexMatrix::ComplexMatrix(ModeSet modes) : modes_(modes), dim_(dim_for(modes)) {
    if (modes.empty()) throw ContractViolation("matrix must span at least one mode");
}

ComplexMatrix ComplexMatrix::zeros(std::size_t dim) { return ComplexMatrix(modes_for_dim(dim)); }

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m = zeros(dim);
    for (std::size_t r = 0; r < dim; ++r) m(r, r) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m = zeros(values.size());
    for (std::size_t r = 0; r < values.size(); ++r) m(r, r) = values[r];
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    ComplexMatrix m = zeros(rows.size());
    std::size_t r = 0;
    for (const auto &row : rows) {
        if (row.size() != rows.size()) throw ContractViolation("from_rows needs a square matrix");
        std::size_t c = 0;
        for (const cplx &v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) t += (*this)(r, r);
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(modes_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    }
    return out;
}

double ComplexMatrix::hermiticity_error() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    if (dim_ != other.dim_) throw ContractViolation("dimension mismatch");
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) worst = std::max(worst, std::abs((*this)(r, c) - other(r, c)));
    }
    return worst;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) sum += std::norm((*this)(r, c));
    }
    return std::sqrt(sum);
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    if (dim_ != rhs.dim_) throw ContractViolation("dimension mismatch");
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) (*this)(r, c) += rhs(r, c);
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    if (dim_ != rhs.dim_) throw ContractViolation("dimension mismatch");
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) (*this)(r, c) -= rhs(r, c);
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx scale) {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) (*this)(r, c) *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
    if (lhs.dim() != rhs.dim()) throw ContractViolation("dimension mismatch");
    ComplexMatrix out(lhs.modes());
    const std::size_t n = lhs.dim();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t t = 0; t < n; ++t) {
            const cplx a = lhs(r, t);
            if (a == cplx{}) continue;
            for (std::size_t c = 0; c < n; ++c) out(r, c) += a * rhs(t, c);
        }
    }
    return out;
}

ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    const auto am = a.modes().modes();
    const auto bm = b.modes().modes();
    if (index_of(am.back()) >= index_of(bm.front())) {
        throw ContractViolation("tensor_product: modes of the left factor must precede the right factor");
    }
    const ModeSet joint = a.modes() | b.modes();
    ComplexMatrix out(joint);
    const std::size_t nb = b.dim();
    for (std::size_t ra = 0; ra < a.dim(); ++ra) {
        for (std::size_t ca = 0; ca < a.dim(); ++ca) {
            for (std::size_t rb = 0; rb < nb; ++rb) {
                for (std::size_t cb = 0; cb < nb; ++cb) out(ra * nb + rb, ca * nb + cb) = a(ra, ca) * b(rb, cb);
            }
        }
    }
    return out;
}

EigenResult eigen_hermitian(const ComplexMatrix &m, bool want_vectors) {
    const std::size_t n = m.dim();
    if (n == 0) throw ContractViolation("eigen_hermitian: empty matrix");
    const double herm = m.hermiticity_error();
    if (!(herm < kHermitianTolerance)) {
        throw ContractViolation("eigen_hermitian: matrix is not Hermitian (max |M - M^dagger| = " +
                                std::to_string(herm) + ")");
    }

    ComplexMatrix a = m;
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = a(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const cplx avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
            a(r, c) = avg;
            a(c, r) = std::conj(avg);
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double threshold = kJacobiOffDiagonal * std::max(1.0, a.frobenius_norm());
    for (int sweep = 0; sweep < kJacobiMaxSweeps && off_diagonal_norm(a) >= threshold; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                // Phase-align a(p,q) to a real positive value, then apply the
                // real symmetric Jacobi rotation that annihilates it.
                const cplx phase = apq / r;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * cs;
                // Rotation V restricted to (p,q): [[c, s], [-s conj(phase), c conj(phase)]].
                const cplx vpp = cs;
                const cplx vpq = sn;
                const cplx vqp = -sn * std::conj(phase);
                const cplx vqq = cs * std::conj(phase);

                for (std::size_t row = 0; row < n; ++row) {  // A <- A V
                    const cplx x = a(row, p);
                    const cplx y = a(row, q);
                    a(row, p) = x * vpp + y * vqp;
                    a(row, q) = x * vpq + y * vqq;
                }
                for (std::size_t col = 0; col < n; ++col) {  // A <- V^dagger A
                    const cplx x = a(p, col);
                    const cplx y = a(q, col);
                    a(p, col) = std::conj(vpp) * x + std::conj(vqp) * y;
                    a(q, col) = std::conj(vpq) * x + std::conj(vqq) * y;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                if (want_vectors) {
                    for (std::size_t row = 0; row < n; ++row) {
                        const cplx x = v(row, p);
                        const cplx y = v(row, q);
                        v(row, p) = x * vpp + y * vqp;
                        v(row, q) = x * vpq + y * vqq;
                    }
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigenResult result;
    result.eigenvalues.reserve(n);
    for (std::size_t idx : order) result.eigenvalues.push_back(a(idx, idx).real());
    if (want_vectors) {
        ComplexMatrix sorted(m.modes());
        for (std::size_t col = 0; col < n; ++col) {
            for (std::size_t row = 0; row < n; ++row) sorted(row, col) = v(row, order[col]);
        }
        result.eigenvectors = sorted;
    }
    return result;
}

ComplexMatrix partial_transpose(const ComplexMatrix &m, Mode mode) {
    const unsigned mask = m.modes().local_bit(mode);
    if (m.dim() < 4) throw ContractViolation("partial_transpose needs a 4x4 or 8x8 matrix");
    ComplexMatrix out(m.modes());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            const std::size_t r2 = (r & ~std::size_t{mask}) | (c & mask);
            const std::size_t c2 = (c & ~std::size_t{mask}) | (r & mask);
            out(r2, c2) = m(r, c);
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &m, ModeSet keep) {
    if (m.dim() != 8) throw ContractViolation("partial_trace expects an 8x8 matrix");
    if (keep.empty() || keep.size() >= 3) throw ContractViolation("partial_trace keeps one or two modes");

    const auto kept = keep.modes();
    auto compress = [&](std::size_t full) {
        std::size_t local = 0;
        for (Mode md : kept) local = (local << 1) | ((full & mode_bit(md)) ? 1u : 0u);
        return local;
    };
    unsigned traced_mask = 0;
    for (Mode md : kAllModes) {
        if (!keep.contains(md)) traced_mask |= mode_bit(md);
    }

    ComplexMatrix out(keep);
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            if ((r & traced_mask) != (c & traced_mask)) continue;
            out(compress(r), compress(c)) += m(r, c);
        }
    }
    return out;
}

StateVector StateVector::basis(unsigned index) {
    if (index >= 8) throw ContractViolation("basis index out of range");
    StateVector s;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::basis(std::string_view label) {
    if (label.size() != 3) throw ContractViolation("basis label must have three occupations");
    unsigned index = 0;
    for (char ch : label) {
        if (ch != '0' && ch != '1') throw ContractViolation("basis label must be binary");
        index = (index << 1) | static_cast<unsigned>(ch - '0');
    }
    return basis(index);
}

double StateVector::norm() const {
    double sum = 0.0;
    for (const cplx &a : amps_) sum += std::norm(a);
    return std::sqrt(sum);
}

StateVector StateVector::normalized() const {
    const double nrm = norm();
    if (nrm == 0.0) throw ContractViolation("cannot normalize the zero vector");
    return (1.0 / nrm) * *this;
}

double StateVector::max_abs_diff(const StateVector &other) const {
    double worst = 0.0;
    for (std::size_t n = 0; n < 8; ++n) worst = std::max(worst, std::abs(amps_[n] - other.amps_[n]));
    return worst;
}

StateVector operator+(StateVector lhs, const StateVector &rhs) {
    for (std::size_t n = 0; n < 8; ++n) lhs.amps_[n] += rhs.amps_[n];
    return lhs;
}

StateVector operator*(cplx scale, StateVector s) {
    for (cplx &a : s.amps_) a *= scale;
    return s;
}

StateVector apply_mode_operator(const StateVector &state, Mode mode, Ladder op) {
    const unsigned bit = mode_bit(mode);
    StateVector out;
    for (unsigned idx = 0; idx < 8; ++idx) {
        const bool occupied = idx & bit;
        if (op == Ladder::lower && occupied) out[idx & ~bit] += state[idx];
        if (op == Ladder::raise && !occupied) out[idx | bit] += state[idx];
    }
    return out;
}

ComplexMatrix mode_operator(Mode mode, Ladder op) {
    ComplexMatrix out = ComplexMatrix::zeros(8);
    for (unsigned col = 0; col < 8; ++col) {
        const StateVector image = apply_mode_operator(StateVector::basis(col), mode, op);
        for (unsigned row = 0; row < 8; ++row) out(row, col) = image[row];
    }
    return out;
}

StateVector permute_modes(const StateVector &state, const std::array<Mode, 3> &perm) {
    StateVector out;
    for (unsigned idx = 0; idx < 8; ++idx) {
        unsigned target = 0;
        for (Mode old : kAllModes) {
            if (idx & mode_bit(old)) target |= mode_bit(perm[index_of(old)]);
        }
        out[target] = state[idx];
    }
    return out;
}

StateVector apply_local_unitary(const StateVector &state, Mode mode, const ComplexMatrix &u) {
    if (u.dim() != 2) throw ContractViolation("local unitary must be 2x2");
    const unsigned bit = mode_bit(mode);
    StateVector out;
    for (unsigned idx = 0; idx < 8; ++idx) {
        if (idx & bit) continue;
        const cplx a0 = state[idx];
        const cplx a1 = state[idx | bit];
        out[idx] = u(0, 0) * a0 + u(0, 1) * a1;
        out[idx | bit] = u(1, 0) * a0 + u(1, 1) * a1;
    }
    return out;
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix &m) {
    if (m.dim() != 8) throw ContractViolation("density matrix must be 8x8");
    const double tr_err = std::abs(m.trace() - 1.0);
    if (!(tr_err <= kDensityTraceTolerance)) {
        throw ContractViolation("density matrix trace differs from 1 by " + std::to_string(tr_err));
    }
    const EigenResult eig = eigen_hermitian(m);
    if (eig.eigenvalues.front() < -kDensityEigenTolerance) {
        throw ContractViolation("density matrix has eigenvalue " + std::to_string(eig.eigenvalues.front()));
    }
    ComplexMatrix sym = m;
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = r; c < 8; ++c) {
            const cplx avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
            sym(r, c) = avg;
            sym(c, r) = std::conj(avg);
        }
    }
    return DensityMatrix(sym);
}

DensityMatrix DensityMatrix::from_pure(const StateVector &psi) {
    const double nrm = psi.norm();
    if (!(std::abs(nrm - 1.0) <= 1e-10)) {
        throw ContractViolation("pure state is not normalized (norm " + std::to_string(nrm) + ")");
    }
    ComplexMatrix rho = ComplexMatrix::zeros(8);
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) rho(r, c) = psi[r] * std::conj(psi[c]);
    }
    return DensityMatrix(rho);
}

}  // namespace trisqueeze
