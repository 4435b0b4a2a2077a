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

#include "trisqueeze/extremum.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>
#include <numbers>

#include "trisqueeze/error.hpp"

namespace trisqueeze {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr int kMaxSweeps = 400;
constexpr std::size_t kCandidates = 3;

// Maps angles onto the free slots and packs them with the pinned slots.
class SimplexChart {
   public:
    SimplexChart(Family f, std::span<const PinnedProbability> pins) : n_(amplitude_count(f)), p_(n_, 0.0) {
        std::vector<bool> pinned(n_, false);
        double mass = 0.0;
        for (const PinnedProbability &pin : pins) {
            if (pin.slot >= n_) throw ContractViolation("pinned slot out of range");
            if (pinned[pin.slot]) throw ContractViolation("slot pinned twice");
            if (!(pin.value >= 0.0 && pin.value <= 1.0)) throw ContractViolation("pinned probability outside [0, 1]");
            pinned[pin.slot] = true;
            p_[pin.slot] = pin.value;
            mass += pin.value;
        }
        if (mass > 1.0 + kNormTolerance) throw ContractViolation("pinned probabilities exceed 1");
        free_mass_ = std::max(0.0, 1.0 - mass);
        for (std::size_t s = 0; s < n_; ++s) {
            if (!pinned[s]) free_.push_back(s);
        }
        if (free_.size() < 2) throw ContractViolation("over-constrained: fewer than two free probabilities");
    }

    std::size_t dimensions() const { return free_.size() - 1; }

    const std::vector<double> &probabilities(std::span<const double> angles) {
        double r = free_mass_;
        for (std::size_t d = 0; d < angles.size(); ++d) {
            const double c = std::cos(angles[d]);
            const double s = std::sin(angles[d]);
            p_[free_[d]] = r * c * c;
            r *= s * s;
        }
        p_[free_.back()] = r;
        return p_;
    }

   private:
    std::size_t n_;
    std::vector<double> p_;
    std::vector<std::size_t> free_;
    double free_mass_ = 1.0;
};

struct Point {
    std::vector<double> angles;
    double score;
};

}  // namespace

std::string_view to_string(Goal g) { return g == Goal::Minimize ? "min" : "max"; }

std::size_t slot_of(Family f, std::string_view label, Mode pivot) {
    const std::vector<unsigned> kets = support_kets(f, pivot);
    for (std::size_t s = 0; s < kets.size(); ++s) {
        if (ket_label(kets[s]) == label) return s;
    }
    throw ContractViolation("ket " + std::string(label) + " is not in the support of " + std::string(to_string(f)));
}

PinnedProbability parse_pin(Family f, std::string_view text, Mode pivot) {
    const std::size_t eq = text.find('=');
    if (eq == std::string_view::npos) throw ContractViolation("pin must look like 100=0");
    std::string_view label = text.substr(0, eq);
    if (!label.empty() && (label.front() == 'P' || label.front() == 'p')) label.remove_prefix(1);
    const std::string_view number = text.substr(eq + 1);
    PinnedProbability pin{slot_of(f, label, pivot), 0.0};
    const auto res = std::from_chars(number.data(), number.data() + number.size(), pin.value);
    if (res.ec != std::errc() || res.ptr != number.data() + number.size()) {
        throw ContractViolation("bad pinned probability: " + std::string(number));
    }
    if (!(pin.value >= 0.0 && pin.value <= 1.0)) throw ContractViolation("pinned probability outside [0, 1]");
    return pin;
}

ExtremumResult find_extremum(Family f, Quantity objective, Goal goal, std::span<const PinnedProbability> constraints,
                             std::size_t resolution, Mode pivot) {
    if (f == Family::General) throw ContractViolation("extremum search needs a parametric family");
    if (resolution < 2) throw ContractViolation("resolution must be at least 2");
    SimplexChart chart(f, constraints);
    const std::size_t dims = chart.dimensions();
    const double sign = goal == Goal::Minimize ? 1.0 : -1.0;

    auto score = [&](std::span<const double> angles) {
        return sign * evaluate_quantity(from_probabilities(f, chart.probabilities(angles), pivot), objective);
    };

    // Exhaustive grid, keeping the best few points.
    const double cell = kHalfPi / static_cast<double>(resolution - 1);
    std::vector<Point> best;
    std::vector<std::size_t> counter(dims, 0);
    std::vector<double> angles(dims, 0.0);
    for (;;) {
        for (std::size_t d = 0; d < dims; ++d) angles[d] = static_cast<double>(counter[d]) * cell;
        const double s = score(angles);
        if (best.size() < kCandidates || s < best.back().score) {
            if (best.size() == kCandidates) best.pop_back();
            const auto at = std::upper_bound(best.begin(), best.end(), s,
                                             [](double v, const Point &p) { return v < p.score; });
            best.insert(at, Point{angles, s});
        }
        std::size_t d = 0;
        while (d < dims && ++counter[d] == resolution) counter[d++] = 0;
        if (d == dims) break;
    }

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    for (Point &pt : best) {
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            double moved = 0.0;
            for (std::size_t d = 0; d < dims; ++d) {
                std::vector<double> trial = pt.angles;
                auto along = [&](double x) {
                    trial[d] = x;
                    return score(trial);
                };
                double lo = std::max(0.0, pt.angles[d] - cell);
                double hi = std::min(kHalfPi, pt.angles[d] + cell);
                double x1 = hi - inv_phi * (hi - lo);
                double x2 = lo + inv_phi * (hi - lo);
                double f1 = along(x1);
                double f2 = along(x2);
                while (hi - lo > kExtremumTolerance) {
                    if (f1 < f2) {
                        hi = x2;
                        x2 = x1;
                        f2 = f1;
                        x1 = hi - inv_phi * (hi - lo);
                        f1 = along(x1);
                    } else {
                        lo = x1;
                        x1 = x2;
                        f1 = f2;
                        x2 = lo + inv_phi * (hi - lo);
                        f2 = along(x2);
                    }
                }
                // Golden section never samples the bracket ends; minima often sit on them.
                double x = f1 < f2 ? x1 : x2;
                double fx = std::min(f1, f2);
                for (double edge : {lo, hi}) {
                    const double fe = along(edge);
                    if (fe < fx) {
                        x = edge;
                        fx = fe;
                    }
                }
                if (fx < pt.score) {
                    moved = std::max(moved, std::abs(x - pt.angles[d]));
                    pt.angles[d] = x;
                    pt.score = fx;
                }
            }
            if (moved < kExtremumTolerance) break;
        }
    }
    const auto winner =
        std::min_element(best.begin(), best.end(), [](const Point &a, const Point &b) { return a.score < b.score; });

    ExtremumResult result;
    result.family = f;
    result.objective = objective;
    result.goal = goal;
    result.arg = from_probabilities(f, chart.probabilities(winner->angles), pivot);
    result.value = evaluate_quantity(result.arg, objective);
    result.constraints.assign(constraints.begin(), constraints.end());
    return result;
}

std::string to_json(const ExtremumResult &result) {
    nlohmann::ordered_json j;
    j["family"] = std::string(to_string(result.family));
    j["objective"] = std::string(column_name(result.objective));
    j["goal"] = std::string(to_string(result.goal));
    j["value"] = result.value;
    j["arg"] = nlohmann::ordered_json::parse(to_json(result.arg));
    const std::vector<unsigned> kets = support_kets(result.family, result.arg.pivot);
    nlohmann::ordered_json probs = nlohmann::ordered_json::object();
    const std::vector<double> p = result.arg.probabilities();
    for (std::size_t s = 0; s < p.size(); ++s) probs["P" + ket_label(kets[s])] = p[s];
    j["probabilities"] = std::move(probs);
    nlohmann::ordered_json pins = nlohmann::ordered_json::array();
    for (const PinnedProbability &pin : result.constraints) {
        pins.push_back({{"ket", ket_label(kets[pin.slot])}, {"value", pin.value}});
    }
    j["constraints"] = std::move(pins);
    return j.dump(2);
}

}  // namespace trisqueeze
