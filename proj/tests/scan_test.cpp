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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "gtest/gtest.h"
#include "trisqueeze/error.hpp"

using namespace trisqueeze;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string &name) {
    const fs::path dir = fs::path(TRISQUEEZE_TEST_TMP) / "scan" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

SamplerConfig config(std::size_t count, std::uint64_t seed = 20250101) {
    SamplerConfig cfg;
    cfg.count = count;
    cfg.seed = seed;
    return cfg;
}

}  // namespace

TEST(scan, quantity_names_round_trip) {
    for (Quantity q : kAllQuantities) {
        const auto parsed = parse_quantity(column_name(q));
        ASSERT_TRUE(parsed.has_value()) << column_name(q);
        EXPECT_EQ(*parsed, q);
    }
    EXPECT_EQ(column_name(Quantity::N_j_ik), "N_j-ik");
    EXPECT_EQ(parse_quantity("N_k_ij"), Quantity::N_k_ij);
    EXPECT_FALSE(parse_quantity("lambda_ii").has_value());
    EXPECT_FALSE(parse_quantity("").has_value());
}

TEST(scan, standard_quantum_limits) {
    EXPECT_EQ(standard_quantum_limit(Quantity::lambda_ik), 2.0);
    EXPECT_EQ(standard_quantum_limit(Quantity::lambda_ijk), 3.0);
    EXPECT_THROW(standard_quantum_limit(Quantity::N_ijk), ContractViolation);
    EXPECT_TRUE(is_squeeze_variance(Quantity::lambda_jk));
    EXPECT_FALSE(is_squeeze_variance(Quantity::N_i_jk));
}

TEST(scan, evaluate_quantity_matches_full_evaluation) {
    for (Family f : kParametricFamilies) {
        for (const FamilySpec &spec : sample_family(f, config(40, 3))) {
            const ScanRecord r = evaluate(spec);
            for (Quantity q : kAllQuantities) {
                EXPECT_NEAR(evaluate_quantity(spec, q), value_of(r, q), 1e-13) << column_name(q);
            }
        }
    }
}

TEST(scan, evaluate_fills_closed_form_when_applicable) {
    const auto specs = sample_family(Family::III_2, config(5));
    EXPECT_TRUE(evaluate(specs[0]).squeeze_closed.has_value());

    SamplerConfig signed_cfg = config(5);
    signed_cfg.amplitude_mode = AmplitudeMode::RealSigned;
    bool saw_negative = false;
    for (const FamilySpec &spec : sample_family(Family::III_2, signed_cfg)) {
        const bool negative = std::any_of(spec.amplitudes.begin(), spec.amplitudes.end(),
                                          [](cplx a) { return a.real() < 0.0; });
        saw_negative |= negative;
        EXPECT_EQ(evaluate(spec).squeeze_closed.has_value(), !negative);
    }
    EXPECT_TRUE(saw_negative);
    EXPECT_FALSE(evaluate(sample_family(Family::General, config(1))[0]).squeeze_closed.has_value());
}

TEST(scan, closed_form_deviation_is_max_abs) {
    SqueezeReport a;
    SqueezeReport b;
    b.lambda_ik = 1e-3;
    b.lambda_ijk = -2e-3;
    EXPECT_DOUBLE_EQ(closed_form_deviation(a, b), 2e-3);
    const ClosedFormMismatch e("lambda mismatch", "{\"family\":\"III_0\"}");
    EXPECT_EQ(e.spec_json(), "{\"family\":\"III_0\"}");
}

TEST(scan, parallel_evaluation_preserves_order) {
    const auto specs = sample_family(Family::III_3, config(301, 11));
    const auto serial = evaluate_all(specs, kZeroNegativity, 1);
    const auto parallel = evaluate_all(specs, kZeroNegativity, 3);
    ASSERT_EQ(serial.size(), specs.size());
    ASSERT_EQ(parallel.size(), specs.size());
    for (std::size_t n = 0; n < specs.size(); ++n) {
        EXPECT_EQ(serial[n].spec.amplitudes, specs[n].amplitudes);
        EXPECT_EQ(parallel[n].spec.amplitudes, specs[n].amplitudes);
        for (Quantity q : kAllQuantities) EXPECT_EQ(value_of(serial[n], q), value_of(parallel[n], q));
    }
}

TEST(scan, invalid_spec_propagates_from_workers) {
    auto specs = sample_family(Family::III_1B, config(20));
    specs[7].amplitudes[0] *= 2.0;
    EXPECT_THROW(evaluate_all(specs, kZeroNegativity, 3), ContractViolation);
}

TEST(scan, boundary_edges_shapes) {
    EXPECT_EQ(boundary_edges(Family::III_0), std::vector<std::vector<std::size_t>>{{}});
    EXPECT_EQ(boundary_edges(Family::III_1A).size(), 3u);
    EXPECT_EQ(boundary_edges(Family::III_2).size(), 6u);
    EXPECT_TRUE(boundary_edges(Family::General).empty());
    for (const auto &edge : boundary_edges(Family::III_2)) EXPECT_EQ(edge.size(), 2u);
}

TEST(scan, edge_states_walk_the_edge) {
    const std::vector<std::size_t> zero = {0};
    const auto states = edge_states(Family::III_1A, zero, 11);
    ASSERT_EQ(states.size(), 11u);
    for (std::size_t n = 0; n < states.size(); ++n) {
        const auto p = states[n].probabilities();
        EXPECT_EQ(p[0], 0.0);
        EXPECT_NEAR(p[1], n / 10.0, 1e-15);
        EXPECT_NEAR(p[2], 1.0 - n / 10.0, 1e-15);
    }
    EXPECT_EQ(boundary_states(Family::III_3, 7).size(), 21u);
}

TEST(scan, csv_is_byte_deterministic) {
    const fs::path dir = temp_dir("determinism");
    ScanOptions opt;
    opt.boundary_points = 5;
    opt.threads = 2;
    run_scan(Family::III_1B, config(200), dir / "a.csv", opt);
    opt.threads = 1;
    run_scan(Family::III_1B, config(200), dir / "b.csv", opt);
    const std::string a = slurp(dir / "a.csv");
    EXPECT_EQ(a, slurp(dir / "b.csv"));
    run_scan(Family::III_1B, config(200, 7), dir / "c.csv", opt);
    EXPECT_NE(a, slurp(dir / "c.csv"));
}

TEST(scan, csv_layout) {
    const fs::path dir = temp_dir("layout");
    ScanOptions opt;
    opt.boundary_points = 3;
    const ScanSummary s = run_scan(Family::III_0, config(4), dir / "out.csv", opt);
    EXPECT_EQ(s.samples, 4u);
    EXPECT_EQ(s.boundary_states, 3u);

    std::ifstream in(dir / "out.csv");
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header.rfind("index,source,family,family_pivot,amp0_re,amp0_im,amp1_re,amp1_im,N_ij,", 0), 0u)
        << header;
    EXPECT_NE(header.find(",lambda_ijk,cf_lambda_ij,"), std::string::npos);
    EXPECT_NE(header.find(",major,subtype,pattern_ij,pattern_ik,pattern_jk,pivot"), std::string::npos);
    std::vector<std::string> rows;
    for (std::string line; std::getline(in, line);) rows.push_back(line);
    ASSERT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[0].rfind("0,sample,III_0,i,", 0), 0u) << rows[0];
    EXPECT_EQ(rows[6].rfind("6,boundary,III_0,i,", 0), 0u) << rows[6];
}

TEST(scan, iii_0_never_squeezes) {
    const fs::path dir = temp_dir("iii0");
    const ScanSummary s = run_scan(Family::III_0, config(10000), dir / "out.csv");
    EXPECT_NEAR(s.range(Quantity::lambda_ij).min, 2.0, 1e-9);
    EXPECT_NEAR(s.range(Quantity::lambda_ijk).min, 3.0, 1e-9);
    EXPECT_LE(s.range(Quantity::N_jk).max, kZeroNegativity);
    EXPECT_NEAR(s.range(Quantity::N_ijk).max, 1.0, 1e-6);
}

TEST(scan, iii_1a_two_mode_minimum) {
    const fs::path dir = temp_dir("iii1a");
    const ScanSummary s = run_scan(Family::III_1A, config(100000), dir / "out.csv");
    EXPECT_NEAR(s.range(Quantity::lambda_jk).min, 4.0 - 2.0 * std::numbers::sqrt2, 1e-3);
    EXPECT_GE(s.range(Quantity::lambda_ij).min, 1.75 - 1e-9);
}

TEST(scan, iii_3_jk_not_squeezed) {
    const fs::path dir = temp_dir("iii3");
    const ScanSummary s = run_scan(Family::III_3, config(20000), dir / "out.csv");
    EXPECT_GE(s.range(Quantity::lambda_jk).min, 2.0 - 1e-12);
}

TEST(scan, summary_json_lists_columns) {
    const fs::path dir = temp_dir("summary");
    const ScanSummary s = run_scan(Family::III_2, config(50), dir / "out.csv");
    const std::string json = summary_json(s);
    EXPECT_NE(json.find("\"family\""), std::string::npos);
    EXPECT_NE(json.find("\"lambda_ijk\""), std::string::npos);
    EXPECT_NE(json.find("\"N_i-jk\""), std::string::npos);
}

TEST(scan, unwritable_path_is_io_error) {
    const fs::path dir = temp_dir("blocked");
    std::ofstream(dir / "file") << "x";
    EXPECT_THROW(run_scan(Family::III_0, config(3), dir / "file" / "out.csv"), IoError);
}
