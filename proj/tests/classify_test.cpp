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

#include "trisqueeze/classify.hpp"

#include "gtest/gtest.h"
#include "trisqueeze/error.hpp"
#include "trisqueeze/state.hpp"

using namespace trisqueeze;

namespace {

DensityMatrix pure(std::initializer_list<std::string_view> kets) {
    StateVector psi;
    for (std::string_view k : kets) psi = psi + StateVector::basis(k);
    return DensityMatrix::from_pure(psi.normalized());
}

}  // namespace

TEST(classify, ghz) {
    const StateClass c = classify_state(pure({"000", "111"}));
    EXPECT_EQ(c.major, MajorType::III_Tripartite);
    EXPECT_EQ(c.subtype, Subtype::III_0);
    EXPECT_FALSE(c.pivot.has_value());
}

TEST(classify, w_state) {
    const StateClass c = classify_state(pure({"001", "010", "100"}));
    EXPECT_EQ(c.major, MajorType::III_Tripartite);
    EXPECT_EQ(c.subtype, Subtype::III_3);
    EXPECT_EQ(c.pattern, (std::array<bool, 3>{true, true, true}));
}

TEST(classify, product_state) {
    const StateClass c = classify_state(pure({"000"}));
    EXPECT_EQ(c.major, MajorType::I_Separable);
    EXPECT_FALSE(c.subtype.has_value());
}

TEST(classify, bipartite_only) {
    // Bell pair on (j, k) with mode i in a product state.
    const StateClass c = classify_state(pure({"000", "011"}));
    EXPECT_EQ(c.major, MajorType::II_BipartiteOnly);
    EXPECT_FALSE(c.subtype.has_value());
    EXPECT_EQ(c.pattern, (std::array<bool, 3>{false, false, true}));
}

TEST(classify, degenerate_corner_drops_class) {
    // III_1A with P111 = 0 is not tripartite-entangled.
    const std::array<double, 3> p = {0.5, 0.5, 0.0};
    const StateClass c = classify_state(pure_density(build_state(from_probabilities(Family::III_1A, p))));
    EXPECT_NE(c.major, MajorType::III_Tripartite);
}

TEST(classify, pivots) {
    const std::array<double, 3> p3 = {0.3, 0.3, 0.4};
    const std::array<double, 4> p4 = {0.25, 0.25, 0.25, 0.25};
    for (Mode pivot : kAllModes) {
        const StateClass one = classify_state(pure_density(build_state(from_probabilities(Family::III_1A, p3, pivot))));
        EXPECT_EQ(one.subtype, Subtype::III_1);
        EXPECT_EQ(one.pivot, pivot);
        const StateClass two = classify_state(pure_density(build_state(from_probabilities(Family::III_2, p4, pivot))));
        EXPECT_EQ(two.subtype, Subtype::III_2);
        EXPECT_EQ(two.pivot, pivot);
    }
}

TEST(classify, families_match_subtypes) {
    SamplerConfig cfg;
    cfg.count = 3000;
    for (Family f : kParametricFamilies) {
        for (const FamilySpec &s : sample_family(f, cfg)) {
            const auto p = s.probabilities();
            // Near a face the weakest pair negativity drops below epsilon.
            if (*std::min_element(p.begin(), p.end()) < 1e-3) continue;
            const StateClass c = classify_state(pure_density(build_state(s)));
            ASSERT_EQ(c.major, MajorType::III_Tripartite) << to_json(s);
            ASSERT_EQ(c.subtype, expected_subtype(f)) << to_json(s);
            EXPECT_EQ(static_cast<int>(*c.subtype), c.pattern[0] + c.pattern[1] + c.pattern[2]);
        }
    }
}

TEST(classify, relabeling_permutes_pattern) {
    const StateVector psi =
        build_state(from_probabilities(Family::III_2, std::array<double, 4>{0.1, 0.2, 0.3, 0.4}));
    const StateClass base = classify_state(DensityMatrix::from_pure(psi));
    std::array<Mode, 3> perm = {Mode::i, Mode::j, Mode::k};
    do {
        const StateClass moved = classify_state(DensityMatrix::from_pure(permute_modes(psi, perm)));
        EXPECT_EQ(moved.major, base.major);
        EXPECT_EQ(moved.subtype, base.subtype);
        for (std::size_t p = 0; p < 3; ++p) {
            const auto [a, b] = pair_modes(p);
            EXPECT_EQ(moved.pattern[pair_index(perm[index_of(a)], perm[index_of(b)])], base.pattern[p]);
        }
        EXPECT_EQ(moved.pivot, perm[index_of(*base.pivot)]);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(classify, contract) {
    EXPECT_THROW(classify_state(pure({"000"}), 0.0), ContractViolation);
    EXPECT_THROW(expected_subtype(Family::General), ContractViolation);
    EXPECT_EQ(expected_subtype(Family::III_1B), Subtype::III_1);
}
