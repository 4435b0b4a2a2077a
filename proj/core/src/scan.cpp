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

#include "trisqueeze/scan.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <nlohmann/json.hpp>
#include <thread>

#include "trisqueeze/csv.hpp"
#include "trisqueeze/error.hpp"

namespace trisqueeze {

namespace {

constexpr std::array<std::string_view, kAllQuantities.size()> kColumnNames = {
    "N_ij",      "N_ik",      "N_jk",      "N_i-jk",    "N_j-ik",    "N_k-ij",
    "N_ijk",     "lambda_ij", "lambda_ik", "lambda_jk", "lambda_ijk"};

std::size_t slot(Quantity q) { return static_cast<std::size_t>(q); }

std::string csv_bool(bool b) { return b ? "1" : "0"; }

}  // namespace

std::string_view column_name(Quantity q) { return kColumnNames[slot(q)]; }

std::optional<Quantity> parse_quantity(std::string_view text) {
    for (Quantity q : kAllQuantities) {
        std::string alt(column_name(q));
        std::replace(alt.begin(), alt.end(), '-', '_');
        if (text == column_name(q) || text == alt) return q;
    }
    return std::nullopt;
}

bool is_squeeze_variance(Quantity q) { return slot(q) >= slot(Quantity::lambda_ij); }

double standard_quantum_limit(Quantity q) {
    if (!is_squeeze_variance(q)) throw ContractViolation("negativities have no standard quantum limit");
    return q == Quantity::lambda_ijk ? kThreeModeSql : kTwoModeSql;
}

double value_of(const EntanglementReport &e, const SqueezeReport &s, Quantity q) {
    switch (q) {
        case Quantity::N_ij: return e.n_ij;
        case Quantity::N_ik: return e.n_ik;
        case Quantity::N_jk: return e.n_jk;
        case Quantity::N_i_jk: return e.n_i_jk;
        case Quantity::N_j_ik: return e.n_j_ik;
        case Quantity::N_k_ij: return e.n_k_ij;
        case Quantity::N_ijk: return e.n_ijk;
        case Quantity::lambda_ij: return s.lambda_ij;
        case Quantity::lambda_ik: return s.lambda_ik;
        case Quantity::lambda_jk: return s.lambda_jk;
        case Quantity::lambda_ijk: return s.lambda_ijk;
    }
    throw ContractViolation("unknown quantity");
}

double value_of(const ScanRecord &record, Quantity q) {
    return value_of(record.entanglement, record.squeeze_numeric, q);
}

double closed_form_deviation(const SqueezeReport &closed, const SqueezeReport &numeric) {
    return std::max({std::abs(closed.lambda_ij - numeric.lambda_ij), std::abs(closed.lambda_ik - numeric.lambda_ik),
                     std::abs(closed.lambda_jk - numeric.lambda_jk),
                     std::abs(closed.lambda_ijk - numeric.lambda_ijk)});
}

ScanRecord evaluate(const FamilySpec &spec, double epsilon) {
    validate(spec);
    const DensityMatrix rho = DensityMatrix::from_pure(build_state(spec));
    ScanRecord record{spec, tripartite_negativity(rho), squeeze_report(rho), std::nullopt, {}};
    record.state_class = classify_report(record.entanglement, epsilon);
    if (has_closed_form(spec)) {
        SqueezeReport closed = lambda_closed_form(spec);
        const double dev = closed_form_deviation(closed, record.squeeze_numeric);
        if (!(dev <= kClosedFormTolerance)) {
            throw ClosedFormMismatch("closed form deviates from moments by " + format_double(dev), to_json(spec));
        }
        record.squeeze_closed = std::move(closed);
    }
    return record;
}

double evaluate_quantity(const FamilySpec &spec, Quantity q) {
    const DensityMatrix rho = DensityMatrix::from_pure(build_state(spec));
    switch (q) {
        case Quantity::N_ij: return negativity_pair(rho, Mode::i, Mode::j);
        case Quantity::N_ik: return negativity_pair(rho, Mode::i, Mode::k);
        case Quantity::N_jk: return negativity_pair(rho, Mode::j, Mode::k);
        case Quantity::N_i_jk: return negativity_bipartition(rho, Mode::i);
        case Quantity::N_j_ik: return negativity_bipartition(rho, Mode::j);
        case Quantity::N_k_ij: return negativity_bipartition(rho, Mode::k);
        case Quantity::N_ijk:
            return std::cbrt(negativity_bipartition(rho, Mode::i) * negativity_bipartition(rho, Mode::j) *
                             negativity_bipartition(rho, Mode::k));
        default: break;
    }
    const MomentTable t = compute_moments(rho);
    switch (q) {
        case Quantity::lambda_ij: return lambda_two_mode(t, Mode::i, Mode::j);
        case Quantity::lambda_ik: return lambda_two_mode(t, Mode::i, Mode::k);
        case Quantity::lambda_jk: return lambda_two_mode(t, Mode::j, Mode::k);
        default: return lambda_three_mode(t);
    }
}

std::vector<ScanRecord> evaluate_all(std::span<const FamilySpec> specs, double epsilon, unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, specs.size())));

    std::vector<std::optional<ScanRecord>> slots(specs.size());
    std::vector<std::size_t> failed_at(threads, std::numeric_limits<std::size_t>::max());
    std::vector<std::exception_ptr> failure(threads);

    // Worker w owns the contiguous block [w*n/T, (w+1)*n/T).
    auto work = [&](unsigned w) {
        const std::size_t lo = specs.size() * w / threads;
        const std::size_t hi = specs.size() * (w + 1) / threads;
        for (std::size_t n = lo; n < hi; ++n) {
            try {
                slots[n] = evaluate(specs[n], epsilon);
            } catch (...) {
                failed_at[w] = n;
                failure[w] = std::current_exception();
                return;
            }
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    }

    const auto first = std::min_element(failed_at.begin(), failed_at.end());
    if (*first != std::numeric_limits<std::size_t>::max()) {
        std::rethrow_exception(failure[static_cast<std::size_t>(first - failed_at.begin())]);
    }
    std::vector<ScanRecord> out;
    out.reserve(slots.size());
    for (auto &s : slots) out.push_back(std::move(*s));
    return out;
}

std::vector<std::vector<std::size_t>> boundary_edges(Family f) {
    if (f == Family::General) return {};
    const std::size_t n = amplitude_count(f);
    if (n == 2) return {{}};
    std::vector<std::vector<std::size_t>> edges;
    // Choose the two free slots; everything else is pinned to zero.
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            std::vector<std::size_t> zeros;
            for (std::size_t s = 0; s < n; ++s) {
                if (s != a && s != b) zeros.push_back(s);
            }
            edges.push_back(std::move(zeros));
        }
    }
    // Order by the first pinned slot so three-slot families list P0=0 first.
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<FamilySpec> edge_states(Family f, std::span<const std::size_t> zero_slots, std::size_t points,
                                    Mode pivot) {
    if (f == Family::General) throw ContractViolation("GENERAL has no boundary edges");
    if (points < 2) throw ContractViolation("an edge needs at least two points");
    const std::size_t n = amplitude_count(f);
    std::vector<std::size_t> free;
    for (std::size_t s = 0; s < n; ++s) {
        if (std::find(zero_slots.begin(), zero_slots.end(), s) == zero_slots.end()) free.push_back(s);
    }
    if (free.size() != 2) throw ContractViolation("an edge leaves exactly two free slots");

    std::vector<FamilySpec> out;
    out.reserve(points);
    std::vector<double> p(n, 0.0);
    for (std::size_t m = 0; m < points; ++m) {
        const double t = static_cast<double>(m) / static_cast<double>(points - 1);
        p[free[0]] = t;
        p[free[1]] = 1.0 - t;
        out.push_back(from_probabilities(f, p, pivot));
    }
    return out;
}

std::vector<FamilySpec> boundary_states(Family f, std::size_t points_per_edge, Mode pivot) {
    std::vector<FamilySpec> out;
    for (const auto &edge : boundary_edges(f)) {
        auto states = edge_states(f, edge, points_per_edge, pivot);
        out.insert(out.end(), states.begin(), states.end());
    }
    return out;
}

ScanSummary summarize(Family family, std::span<const ScanRecord> records, std::size_t samples) {
    ScanSummary summary;
    summary.family = family;
    summary.samples = samples;
    summary.boundary_states = records.size() - std::min(samples, records.size());
    for (ColumnRange &r : summary.ranges) {
        r.min = std::numeric_limits<double>::infinity();
        r.max = -std::numeric_limits<double>::infinity();
    }
    for (const ScanRecord &rec : records) {
        for (Quantity q : kAllQuantities) {
            const double v = value_of(rec, q);
            ColumnRange &r = summary.ranges[slot(q)];
            r.min = std::min(r.min, v);
            r.max = std::max(r.max, v);
        }
    }
    return summary;
}

void write_scan_csv(std::ostream &os, Family family, std::span<const ScanRecord> records, std::size_t samples) {
    const std::size_t amps = family == Family::General ? 8 : amplitude_count(family);
    std::vector<std::string> header = {"index", "source", "family", "family_pivot"};
    for (std::size_t a = 0; a < amps; ++a) {
        header.push_back("amp" + std::to_string(a) + "_re");
        header.push_back("amp" + std::to_string(a) + "_im");
    }
    for (Quantity q : kAllQuantities) header.emplace_back(column_name(q));
    for (std::string_view name : {"cf_lambda_ij", "cf_lambda_ik", "cf_lambda_jk", "cf_lambda_ijk"}) {
        header.emplace_back(name);
    }
    for (std::string_view name : {"major", "subtype", "pattern_ij", "pattern_ik", "pattern_jk", "pivot"}) {
        header.emplace_back(name);
    }
    write_csv_row(os, header);

    std::vector<std::string> row;
    for (std::size_t n = 0; n < records.size(); ++n) {
        const ScanRecord &rec = records[n];
        row.clear();
        row.push_back(std::to_string(n));
        row.emplace_back(n < samples ? "sample" : "boundary");
        row.emplace_back(to_string(rec.spec.family));
        row.emplace_back(to_string(rec.spec.pivot));
        for (const cplx &a : rec.spec.amplitudes) {
            row.push_back(format_double(a.real()));
            row.push_back(format_double(a.imag()));
        }
        for (Quantity q : kAllQuantities) row.push_back(format_double(value_of(rec, q)));
        if (rec.squeeze_closed) {
            const SqueezeReport &c = *rec.squeeze_closed;
            for (double v : {c.lambda_ij, c.lambda_ik, c.lambda_jk, c.lambda_ijk}) row.push_back(format_double(v));
        } else {
            row.insert(row.end(), 4, "");
        }
        const StateClass &cls = rec.state_class;
        row.emplace_back(to_string(cls.major));
        row.emplace_back(cls.subtype ? std::string(to_string(*cls.subtype)) : "");
        for (bool b : cls.pattern) row.push_back(csv_bool(b));
        row.emplace_back(cls.pivot ? std::string(to_string(*cls.pivot)) : "");
        write_csv_row(os, row);
    }
}

ScanSummary run_scan(Family family, const SamplerConfig &cfg, const std::filesystem::path &out,
                     const ScanOptions &options) {
    std::vector<FamilySpec> specs = sample_family(family, cfg, options.pivot);
    const std::size_t samples = specs.size();
    if (options.boundary_points > 0 && family != Family::General) {
        auto edge = boundary_states(family, options.boundary_points, options.pivot);
        specs.insert(specs.end(), edge.begin(), edge.end());
    }
    const std::vector<ScanRecord> records = evaluate_all(specs, options.epsilon, options.threads);

    std::ofstream os = open_output(out);
    write_scan_csv(os, family, records, samples);
    os.flush();
    if (!os) throw IoError("write failed", out);
    return summarize(family, records, samples);
}

std::string summary_json(const ScanSummary &summary) {
    nlohmann::ordered_json j;
    j["family"] = std::string(to_string(summary.family));
    j["samples"] = summary.samples;
    j["boundary_states"] = summary.boundary_states;
    nlohmann::ordered_json cols = nlohmann::ordered_json::object();
    for (Quantity q : kAllQuantities) {
        cols[std::string(column_name(q))] = {{"min", summary.range(q).min}, {"max", summary.range(q).max}};
    }
    j["columns"] = std::move(cols);
    return j.dump(2);
}

}  // namespace trisqueeze
