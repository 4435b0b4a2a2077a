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

#ifndef TRISQUEEZE_STATE_HPP
#define TRISQUEEZE_STATE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trisqueeze/linalg.hpp"

namespace trisqueeze {

/// Parametric pure-state families of tripartite-entangled three-qubit states.
enum class Family { III_0, III_1A, III_1B, III_2, III_3, General };

inline constexpr std::array<Family, 5> kParametricFamilies = {Family::III_0, Family::III_1A, Family::III_1B,
                                                              Family::III_2, Family::III_3};

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view text);

std::size_t amplitude_count(Family f);

/// Basis indices carrying the family's amplitudes, in amplitude order.
///
/// With pivot i the supports are
///   III_0  {000, 111}
///   III_1A {000, 100, 111}        pair jk entangled
///   III_1B {000, 011, 111}        pair jk entangled
///   III_2  {000, 001, 101, 111}   pairs ij, ik entangled
///   III_3  {000, 101, 110}
/// Another pivot swaps mode i with it. GENERAL spans all eight kets.
std::vector<unsigned> support_kets(Family f, Mode pivot = Mode::i);

/// "101"-style label of a basis index.
std::string ket_label(unsigned index);

struct FamilySpec {
    Family family = Family::General;
    Mode pivot = Mode::i;
    std::vector<cplx> amplitudes;

    std::vector<double> probabilities() const;
};

inline constexpr double kNormTolerance = 1e-12;

/// Throws ContractViolation on wrong amplitude count or norm.
void validate(const FamilySpec &spec);

/// Spec with amplitudes sqrt(p). Probabilities must be >= 0 and sum to 1
/// within 1e-12; they are renormalized to absorb rounding.
FamilySpec from_probabilities(Family f, std::span<const double> probabilities, Mode pivot = Mode::i);

StateVector build_state(const FamilySpec &spec);
DensityMatrix pure_density(const StateVector &state);

std::string to_json(const FamilySpec &spec);
FamilySpec family_spec_from_json(std::string_view json);

enum class AmplitudeMode { RealNonnegative, RealSigned, Complex };
enum class Measure { SphereUniform, SimplexUniform };

std::string_view to_string(AmplitudeMode m);
std::string_view to_string(Measure m);
std::optional<AmplitudeMode> parse_amplitude_mode(std::string_view text);
std::optional<Measure> parse_measure(std::string_view text);

struct SamplerConfig {
    std::uint64_t seed = 20250101;
    std::size_t count = 10000;
    AmplitudeMode amplitude_mode = AmplitudeMode::RealNonnegative;
    Measure measure = Measure::SphereUniform;
};

/// 10^4 for III_0, 10^5 for every other family.
std::size_t default_sample_count(Family f);

/// Seeded, sequential stream of family members. Identical configurations
/// produce bit-identical streams.
class FamilySampler {
   public:
    FamilySampler(Family family, const SamplerConfig &cfg, Mode pivot = Mode::i);

    std::optional<FamilySpec> next();
    std::size_t remaining() const { return remaining_; }

   private:
    Family family_;
    Mode pivot_;
    SamplerConfig cfg_;
    std::size_t remaining_;
    std::mt19937_64 rng_;
};

std::vector<FamilySpec> sample_family(Family family, const SamplerConfig &cfg, Mode pivot = Mode::i);

}  // namespace trisqueeze

#endif  // TRISQUEEZE_STATE_HPP
