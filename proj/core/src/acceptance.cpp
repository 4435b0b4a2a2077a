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

#include "trisqueeze/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>
#include <numbers>
#include <set>
#include <sstream>

#include "trisqueeze/analysis.hpp"
#include "trisqueeze/classify.hpp"
#include "trisqueeze/csv.hpp"
#include "trisqueeze/entanglement.hpp"
#include "trisqueeze/error.hpp"
#include "trisqueeze/extremum.hpp"
#include "trisqueeze/scan.hpp"
#include "trisqueeze/squeezing.hpp"
#include "trisqueeze/state.hpp"
#include "trisqueeze/version.hpp"

namespace trisqueeze {

namespace {

constexpr std::array<std::string_view, 42> kIds = {
    "1",  "2a", "2b", "3a", "3b", "3c", "3d",  "3e",  "4",   "5a",  "5b",  "5c",  "6a",  "6b",
    "6c", "6d", "6e", "6f", "6g", "6h", "7a",  "7b",  "7c",  "8a",  "8b",  "8c",  "8d",  "9a",
    "9b", "10a", "10b", "10c", "11a", "11b", "11c", "12", "13a", "13b", "13c", "13d", "13e", "13f"};

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kOraclePhaseSteps = 10000;
constexpr int kUncertaintyPhaseSteps = 360;
constexpr std::size_t kExtremumResolution = 201;

std::string group_of(std::string_view id) {
    std::size_t n = 0;
    while (n < id.size() && id[n] >= '0' && id[n] <= '9') ++n;
    return std::string(id.substr(0, n));
}

std::string_view comparison_symbol(Comparison c) {
    switch (c) {
        case Comparison::Within: return "|m-e|<=tol";
        case Comparison::AtLeast: return "m>=e-tol";
        case Comparison::AtMost: return "m<=e+tol";
    }
    return "?";
}

class Suite {
   public:
    explicit Suite(const AcceptanceOptions &options) : options_(options) {}

    bool wants(std::string_view group) const {
        return options_.groups.empty() ||
               std::find(options_.groups.begin(), options_.groups.end(), group) != options_.groups.end();
    }

    void add(std::string_view id, std::string description, double measured, double expected, double tolerance,
             Comparison c = Comparison::Within) {
        const auto override_it = options_.tolerance_overrides.find(std::string(id));
        if (override_it != options_.tolerance_overrides.end()) tolerance = override_it->second;
        CriterionResult r{std::string(id), std::move(description), measured, expected, tolerance, c, false};
        r.passed = evaluate_comparison(c, measured, expected, tolerance);
        if (options_.on_result) options_.on_result(r);
        results_.push_back(std::move(r));
    }

    SamplerConfig sampler(std::uint64_t stream, std::size_t count,
                          AmplitudeMode mode = AmplitudeMode::RealNonnegative) const {
        SamplerConfig cfg;
        cfg.seed = options_.seed + stream;
        cfg.count = count;
        cfg.amplitude_mode = mode;
        return cfg;
    }

    unsigned threads() const { return options_.threads; }
    std::vector<CriterionResult> take() { return std::move(results_); }

   private:
    const AcceptanceOptions &options_;
    std::vector<CriterionResult> results_;
};

DensityMatrix pure(std::initializer_list<std::string_view> kets) {
    StateVector psi;
    for (std::string_view k : kets) psi = psi + StateVector::basis(k);
    return DensityMatrix::from_pure(psi.normalized());
}

std::vector<double> probabilities_of(const FamilySpec &spec) { return spec.probabilities(); }

double probability(const FamilySpec &spec, std::string_view ket) {
    return probabilities_of(spec)[slot_of(spec.family, ket, spec.pivot)];
}

double min_over(std::span<const ScanRecord> records, std::initializer_list<Quantity> qs) {
    double m = kInf;
    for (const ScanRecord &r : records) {
        for (Quantity q : qs) m = std::min(m, value_of(r, q));
    }
    return m;
}

std::vector<ScanRecord> with_boundary(Family f, const SamplerConfig &cfg, unsigned threads) {
    std::vector<FamilySpec> specs = sample_family(f, cfg);
    auto edge = boundary_states(f, kBoundaryPoints);
    specs.insert(specs.end(), edge.begin(), edge.end());
    return evaluate_all(specs, kZeroNegativity, threads);
}

// Cheap lambda-only pass over a sampled ensemble.
double min_lambda(Family f, const SamplerConfig &cfg, std::initializer_list<Quantity> qs) {
    double m = kInf;
    FamilySampler sampler(f, cfg);
    while (auto spec = sampler.next()) {
        const SqueezeReport s = squeeze_report(DensityMatrix::from_pure(build_state(*spec)));
        for (Quantity q : qs) m = std::min(m, value_of(EntanglementReport{}, s, q));
    }
    return m;
}

void criteria_entanglement_references(Suite &s) {
    if (s.wants("1")) {
        s.add("1", "GHZ tripartite negativity", tripartite_negativity(pure({"000", "111"})).n_ijk, 1.0, 1e-9);
    }
    if (s.wants("2")) {
        const double n = tripartite_negativity(pure({"001", "010", "100"})).n_ijk;
        s.add("2a", "W tripartite negativity, two-digit value", n, 0.94, 0.005);
        s.add("2b", "W tripartite negativity, exact value 2*sqrt(2)/3", n, 2.0 * std::numbers::sqrt2 / 3.0, 1e-9);
    }
}

void criteria_closed_forms(Suite &s) {
    if (!s.wants("3")) return;
    constexpr std::array<std::string_view, 5> ids = {"3a", "3b", "3c", "3d", "3e"};
    for (std::size_t n = 0; n < kParametricFamilies.size(); ++n) {
        const Family f = kParametricFamilies[n];
        double worst = 0.0;
        FamilySampler sampler(f, s.sampler(300 + n, 10000));
        while (auto spec = sampler.next()) {
            const SqueezeReport numeric = squeeze_report(DensityMatrix::from_pure(build_state(*spec)));
            worst = std::max(worst, closed_form_deviation(lambda_closed_form(*spec), numeric));
        }
        s.add(ids[n], "closed form vs moments, max deviation over 1e4 " + std::string(to_string(f)) + " states",
              worst, 0.0, 1e-9, Comparison::AtMost);
    }
}

void criteria_phase_oracle(Suite &s) {
    if (!s.wants("4")) return;
    double worst = 0.0;
    FamilySampler sampler(Family::General, s.sampler(400, 100, AmplitudeMode::Complex));
    while (auto spec = sampler.next()) {
        const DensityMatrix rho = DensityMatrix::from_pure(build_state(*spec));
        const SqueezeReport rep = squeeze_report(rho);
        for (std::size_t p = 0; p < 3; ++p) {
            const auto [a, b] = pair_modes(p);
            const double scan = quadrature_variance_scan(rho, ModeSet{a, b}, kOraclePhaseSteps);
            worst = std::max(worst, std::abs(scan - rep.pair(a, b)));
        }
        worst = std::max(worst,
                         std::abs(quadrature_variance_scan(rho, ModeSet::all(), kOraclePhaseSteps) - rep.lambda_ijk));
    }
    s.add("4", "moment lambda vs phase-scan minimum, 100 complex GENERAL states", worst, 0.0, 1e-6,
          Comparison::AtMost);
}

void criteria_iii_0(Suite &s) {
    if (!s.wants("5")) return;
    const auto records = with_boundary(Family::III_0, s.sampler(500, 10000), s.threads());
    const double two = min_over(records, {Quantity::lambda_ij, Quantity::lambda_ik, Quantity::lambda_jk});
    const double three = min_over(records, {Quantity::lambda_ijk});
    double below = 0.0;
    for (const ScanRecord &r : records) {
        for (Quantity q : {Quantity::lambda_ij, Quantity::lambda_ik, Quantity::lambda_jk, Quantity::lambda_ijk}) {
            if (is_squeezed(q, value_of(r, q))) below += 1.0;
        }
    }
    s.add("5a", "III_0 min two-mode lambda", two, 2.0, 1e-9);
    s.add("5b", "III_0 min lambda_ijk", three, 3.0, 1e-9);
    s.add("5c", "III_0 variances below the SQL", below, 0.0, 0.0, Comparison::AtMost);
}

void criteria_iii_1a(Suite &s) {
    if (!s.wants("6")) return;
    const Family f = Family::III_1A;
    const ExtremumResult jk = find_extremum(f, Quantity::lambda_jk, Goal::Minimize, {}, kExtremumResolution);
    s.add("6a", "III_1A min lambda_jk", jk.value, 4.0 - 2.0 * std::numbers::sqrt2, 1e-6);
    s.add("6b", "III_1A P111 at min lambda_jk", probability(jk.arg, "111"), (2.0 - std::numbers::sqrt2) / 4.0, 1e-6);
    s.add("6c", "III_1A P000 at min lambda_jk", probability(jk.arg, "000"), 0.0, 1e-6);
    s.add("6d", "III_1A N_jk at min lambda_jk", evaluate_quantity(jk.arg, Quantity::N_jk), 0.7071, 1e-3);

    const std::array<PinnedProbability, 1> pin = {PinnedProbability{slot_of(f, "111"), 0.0}};
    const ExtremumResult ij = find_extremum(f, Quantity::lambda_ij, Goal::Minimize, pin, kExtremumResolution);
    s.add("6e", "III_1A min lambda_ij at P111=0 (closed form)", lambda_closed_form(ij.arg).lambda_ij, 1.75, 1e-9);
    s.add("6f", "III_1A P100 at min lambda_ij", probability(ij.arg, "100"), 0.25, 1e-6);

    const ExtremumResult ijk = find_extremum(f, Quantity::lambda_ijk, Goal::Minimize, {}, kExtremumResolution);
    s.add("6g", "III_1A min lambda_ijk", ijk.value, 2.75, 1e-3);
    s.add("6h", "III_1A N_ijk at min lambda_ijk", evaluate_quantity(ijk.arg, Quantity::N_ijk), 0.0, 1e-3);
}

void criteria_iii_1b(Suite &s) {
    if (!s.wants("7")) return;
    const Family f = Family::III_1B;
    const ExtremumResult ijk = find_extremum(f, Quantity::lambda_ijk, Goal::Minimize, {}, kExtremumResolution);
    s.add("7a", "III_1B min lambda_ijk", ijk.value, 5.0 - 2.0 * std::numbers::sqrt2, 1e-6);
    s.add("7b", "III_1B P000 at min lambda_ijk", probability(ijk.arg, "000"), (2.0 + std::numbers::sqrt2) / 4.0,
          1e-6);
    const double m = min_lambda(f, s.sampler(700, default_sample_count(f)), {Quantity::lambda_ij, Quantity::lambda_ik});
    s.add("7c", "III_1B min lambda_ij, lambda_ik over 1e5 states", m, 2.0, 1e-9, Comparison::AtLeast);
}

void criteria_thresholds(Suite &s) {
    if (!s.wants("8")) return;
    const std::array<std::tuple<std::string_view, Family, double>, 4> rows = {{
        {"8a", Family::III_1A, 0.19},
        {"8b", Family::III_1B, 0.78},
        {"8c", Family::III_2, 0.8},
        {"8d", Family::III_3, 0.89},
    }};
    std::uint64_t stream = 800;
    for (const auto &[id, f, expected] : rows) {
        const ThresholdResult t = squeeze_threshold(f, s.sampler(stream++, default_sample_count(f)));
        s.add(id, "max N_ijk with lambda_ijk < 3, " + std::string(to_string(f)), t.found ? t.threshold : 0.0,
              expected, 0.02);
    }
}

void criteria_iii_2(Suite &s) {
    if (!s.wants("9")) return;
    const Family f = Family::III_2;
    const std::array<PinnedProbability, 2> pins = {PinnedProbability{slot_of(f, "000"), 0.0},
                                                   PinnedProbability{slot_of(f, "111"), 0.0}};
    const ExtremumResult r = find_extremum(f, Quantity::lambda_ij, Goal::Minimize, pins, kExtremumResolution);
    s.add("9a", "III_2 squeezed witness lambda_ij", r.value, 1.75, 1e-3);
    s.add("9b", "III_2 squeezed witness N_ij", evaluate_quantity(r.arg, Quantity::N_ij), 0.09, 0.02,
          Comparison::AtMost);
}

void criteria_iii_3(Suite &s) {
    const Family f = Family::III_3;
    if (s.wants("10")) {
        const ExtremumResult peak = find_extremum(f, Quantity::N_ijk, Goal::Maximize, {}, kExtremumResolution);
        const double expected = (std::sqrt(5.0) - 1.0) / 3.0;
        s.add("10a", "III_3 N_ij at max N_ijk", evaluate_quantity(peak.arg, Quantity::N_ij), expected, 1e-2);
        s.add("10b", "III_3 N_ik at max N_ijk", evaluate_quantity(peak.arg, Quantity::N_ik), expected, 1e-2);
        s.add("10c", "III_3 N_jk at max N_ijk", evaluate_quantity(peak.arg, Quantity::N_jk), expected, 1e-2);
    }
    if (s.wants("11")) {
        const ExtremumResult low = find_extremum(f, Quantity::lambda_ijk, Goal::Minimize, {}, kExtremumResolution);
        s.add("11a", "III_3 min lambda_ijk", low.value, 1.8, 0.05);
        s.add("11b", "III_3 N_ijk at min lambda_ijk", evaluate_quantity(low.arg, Quantity::N_ijk), 0.6, 0.05);
        const double m = min_lambda(f, s.sampler(1100, default_sample_count(f)), {Quantity::lambda_jk});
        s.add("11c", "III_3 min lambda_jk over 1e5 states", m, 2.0, 1e-9, Comparison::AtLeast);
    }
}

void criteria_table(Suite &s) {
    if (!s.wants("12")) return;
    const TableOneResult t = table_one(s.sampler(1200, 0));
    s.add("12", "Table 1 cells matching the reference", static_cast<double>(matching_cells(t.cells, expected_table_one())),
          40.0, 0.0);
}

double permutation_deviation(const StateVector &psi) {
    const DensityMatrix rho = DensityMatrix::from_pure(psi);
    const EntanglementReport e = tripartite_negativity(rho);
    const SqueezeReport q = squeeze_report(rho);
    std::array<Mode, 3> perm = {Mode::i, Mode::j, Mode::k};
    double worst = 0.0;
    do {
        const DensityMatrix moved = DensityMatrix::from_pure(permute_modes(psi, perm));
        const EntanglementReport e2 = tripartite_negativity(moved);
        const SqueezeReport q2 = squeeze_report(moved);
        for (std::size_t p = 0; p < 3; ++p) {
            const auto [a, b] = pair_modes(p);
            const Mode pa = perm[index_of(a)];
            const Mode pb = perm[index_of(b)];
            worst = std::max(worst, std::abs(q2.pair(pa, pb) - q.pair(a, b)));
            worst = std::max(worst, std::abs(e2.pair(pa, pb) - e.pair(a, b)));
        }
        for (Mode m : kAllModes) {
            worst = std::max(worst, std::abs(e2.bipartition(perm[index_of(m)]) - e.bipartition(m)));
        }
        worst = std::max(worst, std::abs(q2.lambda_ijk - q.lambda_ijk));
        worst = std::max(worst, std::abs(e2.n_ijk - e.n_ijk));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return worst;
}

void criteria_invariants(Suite &s) {
    if (!s.wants("13")) return;
    std::vector<FamilySpec> states = sample_family(Family::General, s.sampler(1300, 1000, AmplitudeMode::Complex));

    double two = kInf;
    double three = kInf;
    double involution = 0.0;
    double trace_loss = 0.0;
    double symmetry = 0.0;
    double covariance = 0.0;
    for (std::size_t n = 0; n < states.size(); ++n) {
        const StateVector psi = build_state(states[n]);
        const DensityMatrix rho_pure = DensityMatrix::from_pure(psi);
        for (std::size_t p = 0; p < 4; ++p) {
            const bool all = p == 3;
            const ModeSet modes = all ? ModeSet::all() : ModeSet{pair_modes(p)[0], pair_modes(p)[1]};
            const double bound = all ? 9.0 : 4.0;
            const PhaseMinimum opt = quadrature_phase_minimum(rho_pure, modes, kUncertaintyPhaseSteps);
            const double slack = std::min(uncertainty_product(rho_pure, modes, 0.0),
                                          uncertainty_product(rho_pure, modes, opt.theta)) -
                                 bound;
            (all ? three : two) = std::min(all ? three : two, slack);
        }

        // Mixed state from this and the next two samples.
        ComplexMatrix mix = rho_pure.matrix() * cplx(0.5);
        mix += DensityMatrix::from_pure(build_state(states[(n + 1) % states.size()])).matrix() * cplx(0.3);
        mix += DensityMatrix::from_pure(build_state(states[(n + 2) % states.size()])).matrix() * cplx(0.2);
        const DensityMatrix rho = DensityMatrix::from_matrix(mix);
        for (Mode m : kAllModes) {
            involution = std::max(involution,
                                  partial_transpose(partial_transpose(rho.matrix(), m), m).max_abs_diff(rho.matrix()));
        }
        for (ModeSet keep : {ModeSet{Mode::i}, ModeSet{Mode::j}, ModeSet{Mode::k}, ModeSet{Mode::i, Mode::j},
                             ModeSet{Mode::i, Mode::k}, ModeSet{Mode::j, Mode::k}}) {
            trace_loss = std::max(trace_loss, std::abs(partial_trace(rho.matrix(), keep).trace() - cplx(1.0)));
        }
        for (const DensityMatrix *r : {&rho_pure, &rho}) {
            const EntanglementReport e = tripartite_negativity(*r);
            for (std::size_t p = 0; p < 3; ++p) {
                const auto [a, b] = pair_modes(p);
                symmetry = std::max(symmetry, std::abs(negativity_pair(*r, a, b) - negativity_pair(*r, b, a)));
            }
            for (double v : {e.n_ij, e.n_ik, e.n_jk, e.n_i_jk, e.n_j_ik, e.n_k_ij, e.n_ijk}) {
                symmetry = std::max({symmetry, -v, v - 1.0});
            }
        }
        if (n < 200) covariance = std::max(covariance, permutation_deviation(psi));
    }
    s.add("13a", "two-mode uncertainty product minus 4, minimum", two, 0.0, 1e-9, Comparison::AtLeast);
    s.add("13b", "three-mode uncertainty product minus 9, minimum", three, 0.0, 1e-9, Comparison::AtLeast);
    s.add("13c", "partial transpose involution and trace preservation", std::max(involution, trace_loss), 0.0,
          1e-12, Comparison::AtMost);
    s.add("13d", "negativity symmetry and range violation", symmetry, 0.0, 1e-9, Comparison::AtMost);
    s.add("13e", "mode permutation covariance of both reports", covariance, 0.0, 1e-9, Comparison::AtMost);

    double mismatches = 0.0;
    std::uint64_t stream = 1310;
    for (Family f : kParametricFamilies) {
        const Subtype want = expected_subtype(f);
        std::array<bool, 3> pattern{};
        switch (want) {
            case Subtype::III_0: pattern = {false, false, false}; break;
            case Subtype::III_1: pattern = {false, false, true}; break;
            case Subtype::III_2: pattern = {true, true, false}; break;
            case Subtype::III_3: pattern = {true, true, true}; break;
        }
        FamilySampler sampler(f, s.sampler(stream++, 1000));
        while (auto spec = sampler.next()) {
            const auto p = spec->probabilities();
            if (*std::min_element(p.begin(), p.end()) < 10.0 * kZeroNegativity) continue;
            const StateClass c = classify_state(DensityMatrix::from_pure(build_state(*spec)));
            if (c.major != MajorType::III_Tripartite || c.subtype != want || c.pattern != pattern) mismatches += 1.0;
        }
    }
    s.add("13f", "family states classified outside their subtype", mismatches, 0.0, 0.0, Comparison::AtMost);
}

}  // namespace

std::span<const std::string_view> criterion_ids() { return kIds; }

bool evaluate_comparison(Comparison c, double measured, double expected, double tolerance) {
    if (std::isnan(measured) || !(tolerance >= 0.0)) return false;
    switch (c) {
        case Comparison::Within: return std::abs(measured - expected) <= tolerance;
        case Comparison::AtLeast: return measured >= expected - tolerance;
        case Comparison::AtMost: return measured <= expected + tolerance;
    }
    return false;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options) {
    for (const auto &[id, tol] : options.tolerance_overrides) {
        if (std::find(kIds.begin(), kIds.end(), id) == kIds.end()) {
            throw ContractViolation("unknown criterion id in tolerance override: " + id);
        }
    }
    std::set<std::string> groups;
    for (std::string_view id : kIds) groups.insert(group_of(id));
    for (const std::string &g : options.groups) {
        if (!groups.count(g)) throw ContractViolation("unknown criterion group: " + g);
    }

    Suite suite(options);
    criteria_entanglement_references(suite);
    criteria_closed_forms(suite);
    criteria_phase_oracle(suite);
    criteria_iii_0(suite);
    criteria_iii_1a(suite);
    criteria_iii_1b(suite);
    criteria_thresholds(suite);
    criteria_iii_2(suite);
    criteria_iii_3(suite);
    criteria_table(suite);
    criteria_invariants(suite);
    return suite.take();
}

std::string format_result(const CriterionResult &r) {
    std::ostringstream os;
    os << (r.passed ? "PASS " : "FAIL ") << r.id << std::string(r.id.size() < 4 ? 4 - r.id.size() : 0, ' ') << ' '
       << r.description << "  measured=" << format_double(r.measured) << " expected=" << format_double(r.expected)
       << " tol=" << format_double(r.tolerance) << " (" << comparison_symbol(r.comparison) << ')';
    return os.str();
}

bool all_passed(std::span<const CriterionResult> results) {
    return std::all_of(results.begin(), results.end(), [](const CriterionResult &r) { return r.passed; });
}

void write_text_report(std::ostream &os, std::span<const CriterionResult> results) {
    std::size_t passed = 0;
    for (const CriterionResult &r : results) {
        os << format_result(r) << '\n';
        passed += r.passed ? 1 : 0;
    }
    os << passed << '/' << results.size() << " criteria passed\n";
}

std::string json_report(std::span<const CriterionResult> results, std::uint64_t seed) {
    nlohmann::ordered_json j;
    j["tool_version"] = std::string(version());
    j["seed"] = seed;
    j["passed"] = all_passed(results);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const CriterionResult &r : results) {
        rows.push_back({{"id", r.id},
                        {"description", r.description},
                        {"measured", r.measured},
                        {"expected", r.expected},
                        {"tolerance", r.tolerance},
                        {"comparison", std::string(comparison_symbol(r.comparison))},
                        {"passed", r.passed}});
    }
    j["criteria"] = std::move(rows);
    return j.dump(2);
}

}  // namespace trisqueeze
