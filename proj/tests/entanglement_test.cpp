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

#include "trisqueeze/entanglement.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracle.hpp"
#include "trisqueeze/error.hpp"
#include "trisqueeze/state.hpp"

using namespace trisqueeze;

namespace {

DensityMatrix pure(std::initializer_list<std::string_view> kets) {
    StateVector psi;
    for (std::string_view k : kets) psi = psi + StateVector::basis(k);
    return DensityMatrix::from_pure(psi.normalized());
}

StateVector random_state(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::array<cplx, 8> a{};
    for (cplx &x : a) x = cplx(g(rng), g(rng));
    return StateVector(a).normalized();
}

ComplexMatrix random_unitary_2(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    const double t = u(rng) / 4.0;
    const cplx a = std::polar(1.0, u(rng));
    const cplx b = std::polar(1.0, u(rng));
    return ComplexMatrix::from_rows({{a * std::cos(t), -std::conj(b) * std::sin(t)},
                                     {b * std::sin(t), std::conj(a) * std::cos(t)}});
}

}  // namespace

TEST(entanglement, product_state_is_zero) {
    const EntanglementReport r = tripartite_negativity(pure({"000"}));
    for (double v : {r.n_ij, r.n_ik, r.n_jk, r.n_i_jk, r.n_j_ik, r.n_k_ij, r.n_ijk}) EXPECT_EQ(v, 0.0);
}

TEST(entanglement, ghz) {
    const EntanglementReport r = tripartite_negativity(pure({"000", "111"}));
    EXPECT_EQ(r.n_ij, 0.0);
    EXPECT_EQ(r.n_ik, 0.0);
    EXPECT_EQ(r.n_jk, 0.0);
    for (Mode m : kAllModes) EXPECT_NEAR(r.bipartition(m), 1.0, 1e-12);
    EXPECT_NEAR(r.n_ijk, 1.0, 1e-12);
}

TEST(entanglement, w_state) {
    const DensityMatrix w = pure({"001", "010", "100"});
    const EntanglementReport r = tripartite_negativity(w);
    const double exact = 2.0 * std::sqrt(2.0) / 3.0;
    for (Mode m : kAllModes) EXPECT_NEAR(r.bipartition(m), exact, 1e-12);
    EXPECT_NEAR(r.n_ijk, 0.94, 0.005);
    const oracle::Mat rho = oracle::to_eigen(w.matrix());
    for (int q = 0; q < 3; ++q) EXPECT_NEAR(oracle::negativity_bipartition(rho, q), exact, 1e-12);
}

TEST(entanglement, maximal_pair) {
    const EntanglementReport r = tripartite_negativity(pure({"100", "111"}));
    EXPECT_NEAR(r.n_jk, 1.0, 1e-12);
    EXPECT_EQ(r.n_ij, 0.0);
    EXPECT_EQ(r.n_ik, 0.0);
}

TEST(entanglement, matches_oracle_on_random_states) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const DensityMatrix rho = DensityMatrix::from_pure(random_state(rng));
        const oracle::Mat o = oracle::to_eigen(rho.matrix());
        const EntanglementReport r = tripartite_negativity(rho);
        EXPECT_NEAR(r.n_ij, oracle::negativity_pair(o, 0, 1), 1e-10);
        EXPECT_NEAR(r.n_ik, oracle::negativity_pair(o, 0, 2), 1e-10);
        EXPECT_NEAR(r.n_jk, oracle::negativity_pair(o, 1, 2), 1e-10);
        EXPECT_NEAR(r.n_i_jk, oracle::negativity_bipartition(o, 0), 1e-10);
        EXPECT_NEAR(r.n_j_ik, oracle::negativity_bipartition(o, 1), 1e-10);
        EXPECT_NEAR(r.n_k_ij, oracle::negativity_bipartition(o, 2), 1e-10);
        EXPECT_NEAR(r.n_ijk, std::cbrt(r.n_i_jk * r.n_j_ik * r.n_k_ij), 1e-12);
        for (double v : {r.n_ij, r.n_ik, r.n_jk, r.n_i_jk, r.n_j_ik, r.n_k_ij, r.n_ijk}) {
            EXPECT_GE(v, 0.0);
            EXPECT_LE(v, 1.0 + 1e-12);
        }
    }
}

TEST(entanglement, pair_symmetry) {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = DensityMatrix::from_pure(random_state(rng));
        for (std::size_t p = 0; p < 3; ++p) {
            const auto [a, b] = pair_modes(p);
            EXPECT_NEAR(negativity_pair(rho, a, b), negativity_pair(rho, b, a), 1e-10);
        }
    }
}

TEST(entanglement, local_unitary_invariance) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const StateVector psi = random_state(rng);
        const EntanglementReport before = tripartite_negativity(DensityMatrix::from_pure(psi));
        for (Mode m : kAllModes) {
            const StateVector moved = apply_local_unitary(psi, m, random_unitary_2(rng));
            const EntanglementReport after = tripartite_negativity(DensityMatrix::from_pure(moved));
            EXPECT_NEAR(after.n_ij, before.n_ij, 1e-9);
            EXPECT_NEAR(after.n_ik, before.n_ik, 1e-9);
            EXPECT_NEAR(after.n_jk, before.n_jk, 1e-9);
            EXPECT_NEAR(after.n_i_jk, before.n_i_jk, 1e-9);
            EXPECT_NEAR(after.n_j_ik, before.n_j_ik, 1e-9);
            EXPECT_NEAR(after.n_k_ij, before.n_k_ij, 1e-9);
            EXPECT_NEAR(after.n_ijk, before.n_ijk, 1e-9);
        }
    }
}

TEST(entanglement, iii_0_branch) {
    for (int n = 0; n <= 100; ++n) {
        const double p = n / 100.0;
        const std::array<double, 2> probs = {1.0 - p, p};
        const DensityMatrix rho = pure_density(build_state(from_probabilities(Family::III_0, probs)));
        const double want = 2.0 * std::sqrt(p * (1.0 - p));
        const EntanglementReport r = tripartite_negativity(rho);
        for (Mode m : kAllModes) EXPECT_NEAR(r.bipartition(m), want, 1e-10);
        EXPECT_NEAR(r.n_ijk, want, 1e-10);
    }
}

TEST(entanglement, rejects_invalid_density) {
    const std::array<double, 8> d = {0.5, 0.5, 0.5, 0, 0, 0, 0, 0};
    EXPECT_THROW(DensityMatrix::from_matrix(ComplexMatrix::diagonal(d)), ContractViolation);
    EXPECT_THROW(negativity_pair(pure({"000"}), Mode::i, Mode::i), ContractViolation);
}
