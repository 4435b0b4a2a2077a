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

#include "trisqueeze/state.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <numbers>
#include <string>

#include "trisqueeze/error.hpp"

namespace trisqueeze {

namespace {

unsigned swap_mode_bits(unsigned index, Mode a, Mode b) {
    const bool bit_a = index & mode_bit(a);
    const bool bit_b = index & mode_bit(b);
    unsigned out = index & ~(mode_bit(a) | mode_bit(b));
    if (bit_a) out |= mode_bit(b);
    if (bit_b) out |= mode_bit(a);
    return out;
}

std::vector<unsigned> canonical_support(Family f) {
    switch (f) {
        case Family::III_0:
            return {0b000, 0b111};
        case Family::III_1A:
            return {0b000, 0b100, 0b111};
        case Family::III_1B:
            return {0b000, 0b011, 0b111};
        case Family::III_2:
            return {0b000, 0b001, 0b101, 0b111};
        case Family::III_3:
            return {0b000, 0b101, 0b110};
        case Family::General:
            return {0, 1, 2, 3, 4, 5, 6, 7};
    }
    throw ContractViolation("unknown family");
}

}  // namespace

std::string_view to_string(Family f) {
    switch (f) {
        case Family::III_0:
            return "III_0";
        case Family::III_1A:
            return "III_1A";
        case Family::III_1B:
            return "III_1B";
        case Family::III_2:
            return "III_2";
        case Family::III_3:
            return "III_3";
        case Family::General:
            return "GENERAL";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view text) {
    for (Family f : {Family::III_0, Family::III_1A, Family::III_1B, Family::III_2, Family::III_3, Family::General}) {
        if (text == to_string(f)) return f;
    }
    if (text == "III-0") return Family::III_0;
    if (text == "III-1A") return Family::III_1A;
    if (text == "III-1B") return Family::III_1B;
    if (text == "III-2") return Family::III_2;
    if (text == "III-3") return Family::III_3;
    if (text == "general") return Family::General;
    return std::nullopt;
}

std::size_t amplitude_count(Family f) { return canonical_support(f).size(); }

std::vector<unsigned> support_kets(Family f, Mode pivot) {
    std::vector<unsigned> kets = canonical_support(f);
    if (f == Family::General || pivot == Mode::i) return kets;
    for (unsigned &idx : kets) idx = swap_mode_bits(idx, Mode::i, pivot);
    return kets;
}

std::string ket_label(unsigned index) {
    std::string out(3, '0');
    for (std::size_t n = 0; n < 3; ++n) {
        if (index & (4u >> n)) out[n] = '1';
    }
    return out;
}

std::vector<double> FamilySpec::probabilities() const {
    std::vector<double> out;
    out.reserve(amplitudes.size());
    for (const cplx &a : amplitudes) out.push_back(std::norm(a));
    return out;
}

void validate(const FamilySpec &spec) {
    const std::size_t expected = amplitude_count(spec.family);
    if (spec.amplitudes.size() != expected) {
        throw ContractViolation(std::string(to_string(spec.family)) + " needs " + std::to_string(expected) +
                                " amplitudes, got " + std::to_string(spec.amplitudes.size()));
    }
    double total = 0.0;
    for (const cplx &a : spec.amplitudes) total += std::norm(a);
    if (!(std::abs(total - 1.0) <= kNormTolerance)) {
        throw ContractViolation("amplitudes are not normalized: sum |c|^2 = " + std::to_string(total));
    }
}

FamilySpec from_probabilities(Family f, std::span<const double> probabilities, Mode pivot) {
    if (probabilities.size() != amplitude_count(f)) throw ContractViolation("wrong probability count");
    double total = 0.0;
    for (double p : probabilities) {
        if (!(p >= 0.0)) throw ContractViolation("probabilities must be nonnegative");
        total += p;
    }
    if (!(std::abs(total - 1.0) <= kNormTolerance)) throw ContractViolation("probabilities must sum to 1");
    FamilySpec spec{f, pivot, {}};
    for (double p : probabilities) spec.amplitudes.emplace_back(std::sqrt(p / total), 0.0);
    return spec;
}

StateVector build_state(const FamilySpec &spec) {
    validate(spec);
    const auto kets = support_kets(spec.family, spec.pivot);
    StateVector psi;
    for (std::size_t n = 0; n < kets.size(); ++n) psi[kets[n]] = spec.amplitudes[n];
    return psi;
}

DensityMatrix pure_density(const StateVector &state) { return DensityMatrix::from_pure(state); }

std::string to_json(const FamilySpec &spec) {
    nlohmann::json j;
    j["family"] = std::string(to_string(spec.family));
    j["pivot"] = std::string(to_string(spec.pivot));
    nlohmann::json amps = nlohmann::json::array();
    for (const cplx &a : spec.amplitudes) amps.push_back({{"re", a.real()}, {"im", a.imag()}});
    j["amplitudes"] = std::move(amps);
    return j.dump();
}

FamilySpec family_spec_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ContractViolation(std::string("malformed FamilySpec JSON: ") + e.what());
    }
    FamilySpec spec;
    try {
        const auto family = parse_family(j.at("family").get<std::string>());
        const auto pivot = parse_mode(j.at("pivot").get<std::string>());
        if (!family || !pivot) throw ContractViolation("unknown family or pivot in FamilySpec JSON");
        spec.family = *family;
        spec.pivot = *pivot;
        for (const auto &a : j.at("amplitudes")) spec.amplitudes.emplace_back(a.at("re").get<double>(), a.at("im").get<double>());
    } catch (const nlohmann::json::exception &e) {
        throw ContractViolation(std::string("malformed FamilySpec JSON: ") + e.what());
    }
    validate(spec);
    return spec;
}

std::string_view to_string(AmplitudeMode m) {
    switch (m) {
        case AmplitudeMode::RealNonnegative:
            return "real_nonnegative";
        case AmplitudeMode::RealSigned:
            return "real_signed";
        case AmplitudeMode::Complex:
            return "complex";
    }
    return "?";
}

std::string_view to_string(Measure m) {
    switch (m) {
        case Measure::SphereUniform:
            return "sphere";
        case Measure::SimplexUniform:
            return "simplex";
    }
    return "?";
}

std::optional<AmplitudeMode> parse_amplitude_mode(std::string_view text) {
    for (auto m : {AmplitudeMode::RealNonnegative, AmplitudeMode::RealSigned, AmplitudeMode::Complex}) {
        if (text == to_string(m)) return m;
    }
    return std::nullopt;
}

std::optional<Measure> parse_measure(std::string_view text) {
    for (auto m : {Measure::SphereUniform, Measure::SimplexUniform}) {
        if (text == to_string(m)) return m;
    }
    return std::nullopt;
}

std::size_t default_sample_count(Family f) { return f == Family::III_0 ? 10000 : 100000; }

FamilySampler::FamilySampler(Family family, const SamplerConfig &cfg, Mode pivot)
    : family_(family), pivot_(pivot), cfg_(cfg), remaining_(cfg.count), rng_(cfg.seed) {}

std::optional<FamilySpec> FamilySampler::next() {
    if (remaining_ == 0) return std::nullopt;
    --remaining_;

    const std::size_t d = amplitude_count(family_);
    std::vector<cplx> amps(d);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    if (cfg_.measure == Measure::SphereUniform) {
        for (cplx &a : amps) {
            const double re = gauss(rng_);
            const double im = cfg_.amplitude_mode == AmplitudeMode::Complex ? gauss(rng_) : 0.0;
            a = cplx(re, im);
        }
        if (cfg_.amplitude_mode == AmplitudeMode::RealNonnegative) {
            for (cplx &a : amps) a = std::abs(a.real());
        }
    } else {
        std::exponential_distribution<double> expo(1.0);
        std::vector<double> weights(d);
        double total = 0.0;
        for (double &w : weights) total += (w = expo(rng_));
        for (std::size_t n = 0; n < d; ++n) {
            const double magnitude = std::sqrt(weights[n] / total);
            switch (cfg_.amplitude_mode) {
                case AmplitudeMode::RealNonnegative:
                    amps[n] = magnitude;
                    break;
                case AmplitudeMode::RealSigned:
                    amps[n] = unit(rng_) < 0.5 ? -magnitude : magnitude;
                    break;
                case AmplitudeMode::Complex:
                    amps[n] = std::polar(magnitude, 2.0 * std::numbers::pi * unit(rng_));
                    break;
            }
        }
    }

    double norm2 = 0.0;
    for (const cplx &a : amps) norm2 += std::norm(a);
    if (norm2 == 0.0) {  // measure-zero event; fall back to the first support ket
        amps.assign(d, 0.0);
        amps[0] = 1.0;
        norm2 = 1.0;
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (cplx &a : amps) a *= scale;
    return FamilySpec{family_, pivot_, std::move(amps)};
}

std::vector<FamilySpec> sample_family(Family family, const SamplerConfig &cfg, Mode pivot) {
    FamilySampler sampler(family, cfg, pivot);
    std::vector<FamilySpec> out;
    out.reserve(cfg.count);
    while (auto spec = sampler.next()) out.push_back(std::move(*spec));
    return out;
}

}  // namespace trisqueeze
