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

#ifndef TRISQUEEZE_ACCEPTANCE_HPP
#define TRISQUEEZE_ACCEPTANCE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trisqueeze {

enum class Comparison {
    Within,   // |measured - expected| <= tolerance
    AtLeast,  // measured >= expected - tolerance
    AtMost,   // measured <= expected + tolerance
};

struct CriterionResult {
    std::string id;
    std::string description;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    Comparison comparison = Comparison::Within;
    bool passed = false;
};

struct AcceptanceOptions {
    std::uint64_t seed = 20250101;
    /// Criterion id -> tolerance replacing the built-in one.
    std::map<std::string, double> tolerance_overrides;
    /// Criterion groups to run ("1", "6", ...); empty runs everything.
    std::vector<std::string> groups;
    unsigned threads = 0;
    /// Called as soon as each result is known.
    std::function<void(const CriterionResult &)> on_result;
};

/// Every criterion id, in report order.
std::span<const std::string_view> criterion_ids();

bool evaluate_comparison(Comparison c, double measured, double expected, double tolerance);

/// Throws ContractViolation for an override or group naming no criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options = {});

/// One line: "PASS 6a  <description>  measured=... expected=... tol=...".
std::string format_result(const CriterionResult &result);

bool all_passed(std::span<const CriterionResult> results);

void write_text_report(std::ostream &os, std::span<const CriterionResult> results);
std::string json_report(std::span<const CriterionResult> results, std::uint64_t seed);

}  // namespace trisqueeze

#endif  // TRISQUEEZE_ACCEPTANCE_HPP
