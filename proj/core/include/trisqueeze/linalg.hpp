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

#ifndef TRISQUEEZE_LINALG_HPP
#define TRISQUEEZE_LINALG_HPP

// Dense complex linear algebra for the three-qubit Hilbert space and its
// reductions. Basis convention: |abc> <-> index 4a + 2b + c, where a, b, c
// are the occupations of modes i, j, k. A reduced matrix keeps its modes in
// the order i < j < k, the first kept mode being the most significant bit.

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace trisqueeze {

using cplx = std::complex<double>;

enum class Mode : std::uint8_t { i = 0, j = 1, k = 2 };

inline constexpr std::array<Mode, 3> kAllModes = {Mode::i, Mode::j, Mode::k};

constexpr std::size_t index_of(Mode m) { return static_cast<std::size_t>(m); }

/// Bit of the 3-qubit basis index that carries the occupation of `m`.
constexpr unsigned mode_bit(Mode m) { return 1u << (2 - index_of(m)); }

std::string_view to_string(Mode m);
std::optional<Mode> parse_mode(std::string_view text);

/// The mode not in {a, b}. Throws ContractViolation when a == b.
Mode third_mode(Mode a, Mode b);

/// Unordered mode pair -> 0 (ij), 1 (ik), 2 (jk). Throws on a == b.
std::size_t pair_index(Mode a, Mode b);
std::array<Mode, 2> pair_modes(std::size_t pair);

class ModeSet {
   public:
    constexpr ModeSet() = default;
    constexpr ModeSet(std::initializer_list<Mode> modes) {
        for (Mode m : modes) bits_ |= static_cast<std::uint8_t>(1u << index_of(m));
    }

    static constexpr ModeSet all() { return ModeSet{Mode::i, Mode::j, Mode::k}; }
    /// The first `count` modes in i, j, k order.
    static ModeSet leading(std::size_t count);

    constexpr bool contains(Mode m) const { return (bits_ >> index_of(m)) & 1u; }
    constexpr std::size_t size() const {
        return ((bits_ >> 0) & 1u) + ((bits_ >> 1) & 1u) + ((bits_ >> 2) & 1u);
    }
    constexpr bool empty() const { return bits_ == 0; }
    std::vector<Mode> modes() const;

    /// Bit mask of `m` inside a matrix spanning this set.
    unsigned local_bit(Mode m) const;

    constexpr bool operator==(const ModeSet &) const = default;
    friend constexpr ModeSet operator|(ModeSet a, ModeSet b) {
        ModeSet out;
        out.bits_ = static_cast<std::uint8_t>(a.bits_ | b.bits_);
        return out;
    }

   private:
    std::uint8_t bits_ = 0;
};

/// Square complex matrix of dimension 2, 4 or 8, tagged with the modes it spans.
class ComplexMatrix {
   public:
    static constexpr std::size_t kMaxDim = 8;

    /// Zero matrix over `modes` (dimension 2^|modes|).
    explicit ComplexMatrix(ModeSet modes);

    /// Zero matrix of dimension 2, 4 or 8 spanning the leading modes.
    static ComplexMatrix zeros(std::size_t dim);
    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

    std::size_t dim() const { return dim_; }
    ModeSet modes() const { return modes_; }

    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * kMaxDim + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * kMaxDim + c]; }

    cplx trace() const;
    ComplexMatrix adjoint() const;
    /// max |M - M^dagger| over all entries.
    double hermiticity_error() const;
    double max_abs_diff(const ComplexMatrix &other) const;
    double frobenius_norm() const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(cplx scale);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix m, cplx scale) { return m *= scale; }
    friend ComplexMatrix operator*(cplx scale, ComplexMatrix m) { return m *= scale; }
    friend ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs);

   private:
    ModeSet modes_;
    std::size_t dim_;
    std::array<cplx, kMaxDim * kMaxDim> data_{};
};

/// Tensor product. The modes of `a` must all precede those of `b`.
ComplexMatrix tensor_product(const ComplexMatrix &a, const ComplexMatrix &b);

struct EigenResult {
    std::vector<double> eigenvalues;                 // ascending
    std::optional<ComplexMatrix> eigenvectors;       // columns, same order
};

inline constexpr double kHermitianTolerance = 1e-10;

/// Cyclic complex Jacobi. Inputs within kHermitianTolerance of Hermitian are
/// symmetrized first; anything further away is a ContractViolation.
EigenResult eigen_hermitian(const ComplexMatrix &m, bool want_vectors = false);

/// Transposes the index pair of `mode`. The mode must be spanned by `m`.
ComplexMatrix partial_transpose(const ComplexMatrix &m, Mode mode);

/// Reduces an 8x8 matrix onto one or two modes.
ComplexMatrix partial_trace(const ComplexMatrix &m, ModeSet keep);

/// Eight amplitudes in the |abc> <-> 4a+2b+c basis. Normalization is not
/// enforced here; ladder images are deliberately unnormalized.
class StateVector {
   public:
    StateVector() = default;
    explicit StateVector(const std::array<cplx, 8> &amplitudes) : amps_(amplitudes) {}

    static StateVector basis(unsigned index);
    /// Parses "101" style labels, mode i first.
    static StateVector basis(std::string_view label);

    cplx &operator[](std::size_t index) { return amps_[index]; }
    const cplx &operator[](std::size_t index) const { return amps_[index]; }
    const std::array<cplx, 8> &amplitudes() const { return amps_; }

    double norm() const;
    StateVector normalized() const;
    double max_abs_diff(const StateVector &other) const;

    friend StateVector operator+(StateVector lhs, const StateVector &rhs);
    friend StateVector operator*(cplx scale, StateVector s);

   private:
    std::array<cplx, 8> amps_{};
};

enum class Ladder { lower, raise };

/// Truncated ladder action: a|0>=0, a|1>=|0>, a^dagger|0>=|1>, a^dagger|1>=0.
StateVector apply_mode_operator(const StateVector &state, Mode mode, Ladder op);

/// The 8x8 matrix of the truncated ladder operator on `mode`.
ComplexMatrix mode_operator(Mode mode, Ladder op);

/// Relabels modes: old mode m becomes new mode perm[m].
StateVector permute_modes(const StateVector &state, const std::array<Mode, 3> &perm);

/// Applies a 2x2 unitary to one mode.
StateVector apply_local_unitary(const StateVector &state, Mode mode, const ComplexMatrix &u);

inline constexpr double kDensityTraceTolerance = 1e-8;
inline constexpr double kDensityEigenTolerance = 1e-8;

/// Validated three-qubit density matrix: Hermitian, unit trace within 1e-8,
/// smallest eigenvalue >= -1e-8.
class DensityMatrix {
   public:
    /// Full validation, including an eigensolve. Throws ContractViolation.
    static DensityMatrix from_matrix(const ComplexMatrix &m);
    /// |psi><psi|. Requires |psi| = 1 within 1e-10; no eigensolve needed.
    static DensityMatrix from_pure(const StateVector &psi);

    const ComplexMatrix &matrix() const { return rho_; }
    cplx operator()(std::size_t r, std::size_t c) const { return rho_(r, c); }

   private:
    explicit DensityMatrix(const ComplexMatrix &rho) : rho_(rho) {}
    ComplexMatrix rho_;
};

}  // namespace trisqueeze

#endif  // TRISQUEEZE_LINALG_HPP
