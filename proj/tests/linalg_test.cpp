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

#include <random>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "trisqueeze/error.hpp"

using namespace trisqueeze;

namespace {

ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m = ComplexMatrix::zeros(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        m(r, r) = g(rng);
        for (std::size_t c = r + 1; c < dim; ++c) {
            m(r, c) = cplx(g(rng), g(rng));
            m(c, r) = std::conj(m(r, c));
        }
    }
    return m;
}

StateVector random_state(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::array<cplx, 8> a{};
    for (cplx &x : a) x = cplx(g(rng), g(rng));
    return StateVector(a).normalized();
}

DensityMatrix random_mixed(std::mt19937_64 &rng) {
    ComplexMatrix m = ComplexMatrix::zeros(8);
    const std::array<double, 3> w = {0.6, 0.3, 0.1};
    for (double weight : w) m += DensityMatrix::from_pure(random_state(rng)).matrix() * cplx(weight);
    return DensityMatrix::from_matrix(m);
}

ComplexMatrix bell_pair() {
    const double h = 0.5;
    return ComplexMatrix::from_rows({{h, 0, 0, h}, {0, 0, 0, 0}, {0, 0, 0, 0}, {h, 0, 0, h}});
}

}  // namespace

TEST(linalg, identity_eigenvalues) {
    const EigenResult r = eigen_hermitian(ComplexMatrix::identity(4));
    ASSERT_EQ(r.eigenvalues.size(), 4u);
    for (double e : r.eigenvalues) EXPECT_NEAR(e, 1.0, 1e-14);
}

TEST(linalg, diagonal_eigenvalues_sorted) {
    const std::array<double, 4> d = {0.5, -0.5, 0.5, 0.5};
    const EigenResult r = eigen_hermitian(ComplexMatrix::diagonal(d));
    EXPECT_EQ(r.eigenvalues, (std::vector<double>{-0.5, 0.5, 0.5, 0.5}));
}

TEST(linalg, bell_partial_transpose) {
    const ComplexMatrix pt = partial_transpose(bell_pair(), Mode::i);
    EXPECT_NEAR(std::abs(pt(1, 2) - cplx(0.5)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(pt(0, 3)), 0.0, 1e-15);
    const EigenResult r = eigen_hermitian(pt);
    const std::vector<double> want = {-0.5, 0.5, 0.5, 0.5};
    for (std::size_t n = 0; n < 4; ++n) EXPECT_NEAR(r.eigenvalues[n], want[n], 1e-12);
}

TEST(linalg, eigen_matches_oracle_and_reconstructs) {
    std::mt19937_64 rng(7);
    for (std::size_t dim : {2u, 4u, 8u}) {
        for (int trial = 0; trial < 200; ++trial) {
            const ComplexMatrix m = random_hermitian(dim, rng);
            const EigenResult r = eigen_hermitian(m, true);
            const Eigen::VectorXd want = oracle::eigenvalues(oracle::to_eigen(m));
            const double scale = std::max(1.0, m.frobenius_norm());
            double sum = 0.0;
            for (std::size_t n = 0; n < dim; ++n) {
                EXPECT_NEAR(r.eigenvalues[n], want(n), 1e-10 * scale);
                if (n > 0) EXPECT_LE(r.eigenvalues[n - 1], r.eigenvalues[n]);
                sum += r.eigenvalues[n];
            }
            EXPECT_NEAR(sum, m.trace().real(), 1e-10 * scale);

            const oracle::Mat v = oracle::to_eigen(*r.eigenvectors);
            Eigen::VectorXcd lam(dim);
            for (std::size_t n = 0; n < dim; ++n) lam(n) = r.eigenvalues[n];
            const oracle::Mat back = v * lam.asDiagonal() * v.adjoint();
            EXPECT_LT((back - oracle::to_eigen(m)).cwiseAbs().maxCoeff(), 1e-10 * scale);
        }
    }
}

TEST(linalg, eigen_rejects_non_hermitian) {
    ComplexMatrix m = ComplexMatrix::identity(4);
    m(0, 1) = 1.0;
    EXPECT_THROW(eigen_hermitian(m), ContractViolation);
}

TEST(linalg, eigen_symmetrizes_tiny_drift) {
    ComplexMatrix m = ComplexMatrix::identity(2);
    m(0, 1) = 1e-12;
    EXPECT_NO_THROW(eigen_hermitian(m));
}

TEST(linalg, bad_dimensions) {
    EXPECT_THROW(ComplexMatrix::zeros(0), ContractViolation);
    EXPECT_THROW(ComplexMatrix::zeros(3), ContractViolation);
    EXPECT_THROW(partial_transpose(ComplexMatrix::identity(2), Mode::i), ContractViolation);
}

TEST(linalg, partial_transpose_requires_spanned_mode) {
    // A 4x4 matrix spans modes i and j only.
    EXPECT_THROW(partial_transpose(ComplexMatrix::identity(4), Mode::k), ContractViolation);
}

TEST(linalg, partial_transpose_matches_oracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix rho = random_mixed(rng).matrix();
        for (Mode m : kAllModes) {
            const ComplexMatrix pt = partial_transpose(rho, m);
            const oracle::Mat want = oracle::partial_transpose(oracle::to_eigen(rho), static_cast<int>(index_of(m)), 3);
            EXPECT_LT((oracle::to_eigen(pt) - want).cwiseAbs().maxCoeff(), 1e-15);
            EXPECT_EQ(partial_transpose(pt, m).max_abs_diff(rho), 0.0);
            EXPECT_NEAR(std::abs(pt.trace() - rho.trace()), 0.0, 1e-14);
            EXPECT_LT(pt.hermiticity_error(), 1e-15);
        }
    }
}

TEST(linalg, partial_transpose_leaves_diagonal_alone) {
    const std::array<double, 8> d = {0.1, 0.2, 0.05, 0.15, 0.1, 0.1, 0.2, 0.1};
    const ComplexMatrix m = ComplexMatrix::diagonal(d);
    for (Mode mode : kAllModes) EXPECT_EQ(partial_transpose(m, mode).max_abs_diff(m), 0.0);
}

TEST(linalg, partial_trace_examples) {
    const ComplexMatrix vac = DensityMatrix::from_pure(StateVector::basis("000")).matrix();
    const ComplexMatrix jk = partial_trace(vac, ModeSet{Mode::j, Mode::k});
    ASSERT_EQ(jk.dim(), 4u);
    EXPECT_EQ(jk(0, 0), cplx(1.0));
    EXPECT_NEAR(jk.frobenius_norm(), 1.0, 1e-15);

    const StateVector ghz = (StateVector::basis("000") + StateVector::basis("111")).normalized();
    const ComplexMatrix g = partial_trace(DensityMatrix::from_pure(ghz).matrix(), ModeSet{Mode::j, Mode::k});
    const std::array<double, 4> want = {0.5, 0, 0, 0.5};
    EXPECT_LT(g.max_abs_diff(ComplexMatrix::diagonal(want)), 1e-15);
}

TEST(linalg, partial_trace_matches_oracle_and_preserves_trace) {
    std::mt19937_64 rng(13);
    const std::vector<std::vector<Mode>> keeps = {{Mode::i}, {Mode::j}, {Mode::k},
                                                  {Mode::i, Mode::j}, {Mode::i, Mode::k}, {Mode::j, Mode::k}};
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix rho = random_mixed(rng).matrix();
        for (const auto &keep : keeps) {
            ModeSet set;
            std::vector<int> idx;
            for (Mode m : keep) {
                set = set | ModeSet{m};
                idx.push_back(static_cast<int>(index_of(m)));
            }
            const ComplexMatrix red = partial_trace(rho, set);
            EXPECT_LT((oracle::to_eigen(red) - oracle::partial_trace(oracle::to_eigen(rho), idx)).cwiseAbs().maxCoeff(),
                      1e-14);
            EXPECT_NEAR(std::abs(red.trace() - cplx(1.0)), 0.0, 1e-12);
            EXPECT_LT(red.hermiticity_error(), 1e-15);
        }
    }
}

TEST(linalg, partial_trace_commutes) {
    // Tracing k then j equals keeping i directly.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const ComplexMatrix rho = random_mixed(rng).matrix();
        const ComplexMatrix ij = partial_trace(rho, ModeSet{Mode::i, Mode::j});
        ComplexMatrix i_from_ij(ModeSet{Mode::i});
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                i_from_ij(a, b) = ij(2 * a, 2 * b) + ij(2 * a + 1, 2 * b + 1);
            }
        }
        EXPECT_LT(i_from_ij.max_abs_diff(partial_trace(rho, ModeSet{Mode::i})), 1e-12);
    }
}

TEST(linalg, partial_trace_rejects_empty_and_full) {
    const ComplexMatrix rho = ComplexMatrix::identity(8) * cplx(0.125);
    EXPECT_THROW(partial_trace(rho, ModeSet{}), ContractViolation);
    EXPECT_THROW(partial_trace(rho, ModeSet::all()), ContractViolation);
}

TEST(linalg, tensor_product_of_reductions) {
    const ComplexMatrix a = partial_trace(ComplexMatrix::identity(8) * cplx(0.125), ModeSet{Mode::i});
    const ComplexMatrix b = partial_trace(ComplexMatrix::identity(8) * cplx(0.125), ModeSet{Mode::j, Mode::k});
    const ComplexMatrix ab = tensor_product(a, b);
    EXPECT_EQ(ab.dim(), 8u);
    EXPECT_LT(ab.max_abs_diff(ComplexMatrix::identity(8) * cplx(0.125)), 1e-15);
    EXPECT_THROW(tensor_product(b, a), ContractViolation);
}

TEST(linalg, ladder_examples) {
    EXPECT_EQ(apply_mode_operator(StateVector::basis("000"), Mode::i, Ladder::lower).norm(), 0.0);
    EXPECT_EQ(apply_mode_operator(StateVector::basis("111"), Mode::i, Ladder::lower).max_abs_diff(
                  StateVector::basis("011")),
              0.0);
    EXPECT_EQ(apply_mode_operator(StateVector::basis("101"), Mode::j, Ladder::raise).max_abs_diff(
                  StateVector::basis("111")),
              0.0);
}

TEST(linalg, ladder_round_trips_and_nilpotence) {
    std::mt19937_64 rng(19);
    for (unsigned idx = 0; idx < 8; ++idx) {
        const StateVector b = StateVector::basis(idx);
        for (Mode m : kAllModes) {
            const bool occupied = idx & mode_bit(m);
            if (!occupied) {
                EXPECT_EQ(apply_mode_operator(apply_mode_operator(b, m, Ladder::raise), m, Ladder::lower).max_abs_diff(b),
                          0.0);
            } else {
                EXPECT_EQ(apply_mode_operator(apply_mode_operator(b, m, Ladder::lower), m, Ladder::raise).max_abs_diff(b),
                          0.0);
            }
        }
    }
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector s = random_state(rng);
        for (Mode m : kAllModes) {
            EXPECT_EQ(apply_mode_operator(apply_mode_operator(s, m, Ladder::lower), m, Ladder::lower).norm(), 0.0);
        }
    }
}

TEST(linalg, mode_operator_matches_kron) {
    for (Mode m : kAllModes) {
        const oracle::Mat want = oracle::on_qubit(static_cast<int>(index_of(m)), oracle::lower_qubit());
        EXPECT_EQ((oracle::to_eigen(mode_operator(m, Ladder::lower)) - want).cwiseAbs().maxCoeff(), 0.0);
        EXPECT_EQ((oracle::to_eigen(mode_operator(m, Ladder::raise)) - want.adjoint()).cwiseAbs().maxCoeff(), 0.0);
    }
}

TEST(linalg, permute_modes_moves_occupations) {
    const std::array<Mode, 3> cycle = {Mode::j, Mode::k, Mode::i};  // i->j, j->k, k->i
    EXPECT_EQ(permute_modes(StateVector::basis("100"), cycle).max_abs_diff(StateVector::basis("010")), 0.0);
    EXPECT_EQ(permute_modes(StateVector::basis("001"), cycle).max_abs_diff(StateVector::basis("100")), 0.0);
}

TEST(linalg, density_validation) {
    EXPECT_THROW(DensityMatrix::from_matrix(ComplexMatrix::identity(8)), ContractViolation);
    const std::array<double, 8> neg = {1.1, -0.1, 0, 0, 0, 0, 0, 0};
    EXPECT_THROW(DensityMatrix::from_matrix(ComplexMatrix::diagonal(neg)), ContractViolation);
    EXPECT_THROW(DensityMatrix::from_pure(StateVector::basis("000") + StateVector::basis("001")), ContractViolation);
    EXPECT_THROW(DensityMatrix::from_matrix(ComplexMatrix::identity(4) * cplx(0.25)), ContractViolation);
}

TEST(linalg, pure_density_is_rank_one) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix rho = DensityMatrix::from_pure(random_state(rng));
        const EigenResult r = eigen_hermitian(rho.matrix());
        EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
        EXPECT_LT(std::abs(r.eigenvalues[6]), 1e-10);
        EXPECT_NEAR(r.eigenvalues[7], 1.0, 1e-10);
    }
}

TEST(linalg, mode_helpers) {
    EXPECT_EQ(third_mode(Mode::i, Mode::k), Mode::j);
    EXPECT_THROW(third_mode(Mode::j, Mode::j), ContractViolation);
    EXPECT_EQ(pair_index(Mode::k, Mode::j), 2u);
    EXPECT_THROW(pair_index(Mode::i, Mode::i), ContractViolation);
    EXPECT_EQ(parse_mode("k"), Mode::k);
    EXPECT_FALSE(parse_mode("x").has_value());
    EXPECT_EQ(mode_bit(Mode::i), 4u);
}
