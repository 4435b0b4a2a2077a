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

#ifndef TRISQUEEZE_EXTREMUM_HPP
#define TRISQUEEZE_EXTREMUM_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trisqueeze/scan.hpp"
#include "trisqueeze/state.hpp"

namespace trisqueeze {

enum class Goal { Minimize, Maximize };

std::string_view to_string(Goal g);

/// Probability of one amplitude slot held fixed during the search.
struct PinnedProbability {
    std::size_t slot = 0;
    double value = 0.0;
};

/// Slot of basis ket `label` ("100") in the family support. Throws
/// ContractViolation if the ket is not part of the family.
std::size_t slot_of(Family f, std::string_view label, Mode pivot = Mode::i);

/// Parses "100=0" or "P100=0.25".
PinnedProbability parse_pin(Family f, std::string_view text, Mode pivot = Mode::i);

struct ExtremumResult {
    Family family = Family::General;
    Quantity objective = Quantity::lambda_ijk;
    Goal goal = Goal::Minimize;
    FamilySpec arg;
    double value = 0.0;
    std::vector<PinnedProbability> constraints;
};

inline constexpr std::size_t kDefaultResolution = 101;
inline constexpr double kExtremumTolerance = 1e-10;

/// Grid search over the free part of the probability simplex followed by
/// coordinate golden-section refinement of the three best grid points.
/// The free probabilities are parametrized by hyperspherical angles in
/// [0, pi/2], `resolution` grid points per angle.
///
/// Throws ContractViolation for GENERAL, for pins that leave fewer than two
/// free slots, and for inconsistent pins.
ExtremumResult find_extremum(Family f, Quantity objective, Goal goal,
                             std::span<const PinnedProbability> constraints = {},
                             std::size_t resolution = kDefaultResolution, Mode pivot = Mode::i);

std::string to_json(const ExtremumResult &result);

}  // namespace trisqueeze

#endif  // TRISQUEEZE_EXTREMUM_HPP
