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

#ifndef TRISQUEEZE_CLASSIFY_HPP
#define TRISQUEEZE_CLASSIFY_HPP

#include <array>
#include <optional>
#include <string_view>

#include "trisqueeze/entanglement.hpp"
#include "trisqueeze/linalg.hpp"
#include "trisqueeze/state.hpp"

namespace trisqueeze {

enum class MajorType { I_Separable, II_BipartiteOnly, III_Tripartite };
enum class Subtype { III_0, III_1, III_2, III_3 };

std::string_view to_string(MajorType t);
std::string_view to_string(Subtype s);

struct StateClass {
    MajorType major = MajorType::I_Separable;
    std::optional<Subtype> subtype;
    /// (n_ij > eps, n_ik > eps, n_jk > eps)
    std::array<bool, 3> pattern{};
    /// III-1: the mode outside the entangled pair. III-2: the mode shared by both pairs.
    std::optional<Mode> pivot;

    bool operator==(const StateClass &) const = default;
};

StateClass classify_report(const EntanglementReport &report, double epsilon = kZeroNegativity);
StateClass classify_state(const DensityMatrix &rho, double epsilon = kZeroNegativity);

/// The subtype a family is built to realize (III_1A and III_1B both give III_1).
/// Throws ContractViolation for GENERAL.
Subtype expected_subtype(Family f);

}  // namespace trisqueeze

#endif  // TRISQUEEZE_CLASSIFY_HPP
