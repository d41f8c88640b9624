// Copyright 2026 The capsim Authors
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

#include "capsim/experiments.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "gtest/gtest.h"

#include "capsim/error.hpp"

using namespace capsim;

namespace {

double theta_from_tan2(double tan2) { return std::atan(std::sqrt(tan2)); }

ErrorCode code_of(auto &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode{};
}

}  // namespace

TEST(experiments, model_names_round_trip) {
    for (auto k : {ModelKind::KsQubit, ModelKind::Cap, ModelKind::CapFc, ModelKind::Jl, ModelKind::Ontic}) {
        EXPECT_EQ(parse_model(model_name(k)), k);
    }
    EXPECT_THROW(parse_model("qubit"), Error);
}

TEST(experiments, ks_parallel_is_certain) {
    RngStream rng(1, 0);
    const auto psi = haar_state(2, rng);
    const auto est = estimate_outcome_prob(Model::ks_qubit(), psi, psi, 100000, 2);
    EXPECT_EQ(est.ci.mean, 1.0);
}

TEST(experiments, cap_parallel_matches_analytic_error) {
    const auto p = CapParams::create(4, M_PI / 4);
    RngStream rng(3, 0);
    const auto psi = haar_state(4, rng);
    const auto est = estimate_outcome_prob(Model::cap_model(p), psi, psi, 1000000, 4);
    EXPECT_TRUE(est.ci.contains(0.9208984375)) << est.ci.ci_low << " " << est.ci.ci_high;
    EXPECT_NEAR(1.0 - cap::error_report(p).delta1, 0.9208984375, 1e-15);
}

TEST(experiments, cap_orthogonal_matches_analytic_error) {
    const auto p = CapParams::create(4, theta_from_tan2(1.0));
    const auto r = cap::error_report(p);
    ASSERT_EQ(r.delta1, r.delta2);
    RngStream rng(5, 0);
    const auto psi = haar_state(4, rng);
    const auto perp = orthogonal_complement_sample(psi, rng);
    const auto est = estimate_outcome_prob(Model::cap_model(p), psi, perp, 1000000, 6);
    EXPECT_TRUE(est.ci.contains(r.delta2)) << est.ci.mean;
}

TEST(experiments, factored_channel_matches_direct_protocol) {
    const auto p = CapParams::create(3, 0.8);
    RngStream rng(7, 0);
    const auto psi = haar_state(3, rng);
    const auto phi = random_probe(psi, rng);
    const auto a = estimate_outcome_prob(Model::cap_model(p), psi, phi, 100000, 8);
    const auto b = estimate_outcome_prob(Model::cap_fc(p), psi, phi, 100000, 9);
    EXPECT_LE(std::abs(a.ci.mean - b.ci.mean), 4.0 * std::hypot(a.ci.std_error(), b.ci.std_error()));
    EXPECT_TRUE(std::isinf(a.mean_bits));
    EXPECT_GT(b.mean_bits, 0.0);
    EXPECT_TRUE(std::isfinite(b.mean_bits));
}

TEST(experiments, estimate_preconditions) {
    RngStream rng(0, 0);
    const auto psi = haar_state(2, rng);
    EXPECT_EQ(code_of([&] { estimate_outcome_prob(Model::ks_qubit(), psi, psi, 99, 0); }),
              ErrorCode::InvalidArgument);
    const auto p = CapParams::create(3, 0.5);
    EXPECT_EQ(code_of([&] { estimate_outcome_prob(Model::cap_model(p), psi, psi, 100, 0); }),
              ErrorCode::DimensionMismatch);
}

TEST(experiments, wilson_coverage_over_random_pairs) {
    int covered = 0;
    for (int k = 0; k < 100; ++k) {
        RngStream rng(10, k);
        const auto psi = haar_state(2, rng);
        const auto phi = haar_state(2, rng);
        covered += estimate_outcome_prob(Model::ks_qubit(), psi, phi, 10000, derive_seed(11, k)).ci.contains(
            fidelity(psi, phi));
    }
    EXPECT_GE(covered, 95);
}

TEST(experiments, estimates_ignore_thread_count) {
    const auto p = CapParams::create(5, 0.7);
    RngStream rng(12, 0);
    const auto psi = haar_state(5, rng);
    const auto phi = random_probe(psi, rng);
    for (const Model &m : {Model::cap_model(p), Model::cap_fc(p), Model::jl({5, 3, 16}), Model::ontic(5, 32)}) {
        const auto a = estimate_outcome_prob(m, psi, phi, 5000, 13, 1);
        const auto b = estimate_outcome_prob(m, psi, phi, 5000, 13, 4);
        EXPECT_EQ(a.ci.mean, b.ci.mean);
        EXPECT_EQ(a.mean_bits, b.mean_bits);
    }
}

TEST(experiments, simulate_output_is_reproducible) {
    SimulateConfig cfg{Model::cap_model(CapParams::create(2, M_PI / 4)), 100000, 42, 1};
    const std::string a = to_csv(simulate(cfg));
    cfg.threads = 3;
    const std::string b = to_csv(simulate(cfg));
    EXPECT_EQ(a, b);
    const Table t = simulate(cfg);
    EXPECT_EQ(to_json(t), to_json(simulate(cfg)));
    EXPECT_EQ(t.summary["delta"].get<double>(), 0.125);
    EXPECT_EQ(t.rows.size(), 6u);
}

TEST(experiments, error_sweep_rows) {
    ErrorSweepConfig cfg;
    cfg.dims = {2, 4};
    cfg.thetas = {M_PI / 4, 1e-4, theta_from_tan2(3.0)};
    cfg.trials = 20000;
    cfg.probes = 4;
    cfg.seed = 3;
    const auto rows = error_sweep(cfg);
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_TRUE(rows[0].valid);
    EXPECT_NEAR(rows[0].delta1, 0.125, 1e-15);
    EXPECT_LT(rows[1].delta1, 1e-8);
    EXPECT_FALSE(rows[2].valid);  // tan^2 = 3 is not below N = 2
    EXPECT_FALSE(rows[2].pass());
    EXPECT_TRUE(rows[5].valid);
    for (const auto &r : rows) {
        if (r.valid) EXPECT_TRUE(r.pass()) << r.dim << " " << r.theta_c;
    }
    const Table t = error_sweep_table(cfg, rows);
    EXPECT_EQ(t.rows.size(), 6u);
    EXPECT_EQ(t.summary["valid_rows"].get<int>(), 5);
}

TEST(experiments, error_sweep_from_target_errors) {
    ErrorSweepConfig cfg;
    cfg.dims = {2, 8};
    cfg.deltas = {0.05, 0.3};
    cfg.trials = 1000;
    cfg.probes = 0;
    const auto rows = error_sweep(cfg);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_NEAR(rows[0].delta1, 0.05, 1e-12);
    EXPECT_FALSE(rows[1].valid);  // above (1 - 1/2)^2
    EXPECT_NEAR(rows[3].delta1, 0.3, 1e-12);
    cfg.thetas = {0.3};
    EXPECT_EQ(code_of([&] { error_sweep(cfg); }), ErrorCode::InvalidArgument);
}

TEST(experiments, gap_rows) {
    const auto rows = gap_report(20, 0.01, 5.0);
    ASSERT_EQ(rows.size(), 21u);
    EXPECT_EQ(rows[0].status, "trivial");
    for (int n = 1; n <= 20; ++n) {
        EXPECT_EQ(rows[n].status, "ok");
        EXPECT_EQ(rows[n].strong_bits, 2.0 * rows[n - 1].strong_bits);
    }
    EXPECT_LT(std::abs(rows[20].weak_bits - rows[19].weak_bits) / rows[19].weak_bits, 0.01);
    const auto one = gap_report(1, 0.125, 5.0);
    EXPECT_NEAR(one[1].weak_bits, 1.0, 1e-14);
    const auto big = gap_report(3, 0.3, 5.0);
    EXPECT_EQ(big[1].status, "inadmissible");
    EXPECT_TRUE(std::isnan(big[1].weak_bits));
    EXPECT_EQ(big[3].status, "ok");
    EXPECT_EQ(code_of([] { gap_report(25, 0.01, 5.0); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(gap_table(20, 0.01, 5.0, rows).rows.size(), 21u);
}

TEST(experiments, cost_curve_rows) {
    CostCurveConfig cfg{16, {0.5, 0.1, 0.01}, 5.0, 0.3};
    const Table t = cost_curve(cfg);
    ASSERT_EQ(t.rows.size(), 3u);
    EXPECT_EQ(std::get<std::string>(t.rows[0][1]), "inadmissible");
    EXPECT_NEAR(t.number(1, "weak_asym_bits"), cap::asym_cost_for_error(16, 0.1), 1e-12);
    EXPECT_NEAR(t.number(2, "ontic_bits"), ontic_cost(16, 0.01, 5.0), 1e-12);
    EXPECT_NEAR(t.number(2, "jl_bits"), 0.3 / 1e-4 * std::log2(500.0), 1e-6);
    cfg.beta = 0.0;
    EXPECT_THROW(cost_curve(cfg), Error);
}

TEST(experiments, fc_suite_reports_information) {
    const Table t = fc_suite(CapParams::create(4, M_PI / 4), 10000, 1);
    EXPECT_NEAR(t.number(0, "mutual_info_bits"), 3.0, 1e-12);
    EXPECT_EQ(t.number(0, "entropy_ok"), 1.0);
    EXPECT_THROW(fc_suite(CapParams::create(4, M_PI / 4), 0, 1), Error);
}

TEST(experiments, jl_suite_rejects_empty_trials) {
    JLSuiteConfig cfg;
    cfg.trials = 0;
    EXPECT_THROW(jl_suite(cfg), Error);
    EXPECT_EQ(default_subdims(256), (std::vector<std::size_t>{8, 16, 32, 64, 128}));
    EXPECT_EQ(default_subdims(20), (std::vector<std::size_t>{8, 16}));
}

TEST(experiments, csv_format) {
    Table t;
    t.experiment = "x";
    t.columns = {"a", "b", "c"};
    t.add_row({int64_t{3}, 1.0 / 3.0, std::string("ok")});
    t.add_row({int64_t{-1}, std::nan(""), std::string("z")});
    EXPECT_EQ(to_csv(t), "a,b,c\n3,0.333333333333,ok\n-1,nan,z\n");
    EXPECT_EQ(format_number(0.125), "0.125");
    EXPECT_EQ(format_number(1e-30), "1e-30");
    EXPECT_EQ(format_number(1.0 / 0.0), "inf");
    EXPECT_EQ(format_number(0.0), "0");
}

TEST(experiments, json_format) {
    Table t;
    t.experiment = "x";
    t.columns = {"a", "b"};
    t.config["seed"] = 1;
    t.add_row({int64_t{3}, 1.0 / 3.0});
    const auto j = nlohmann::json::parse(to_json(t));
    EXPECT_EQ(j["experiment"], "x");
    EXPECT_EQ(j["version"], kVersion);
    EXPECT_EQ(j["config"]["seed"], 1);
    EXPECT_EQ(j["results"][0]["a"], 3);
    EXPECT_DOUBLE_EQ(j["results"][0]["b"].get<double>(), 0.333333333333);
}
