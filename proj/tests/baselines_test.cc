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

#include "capsim/baselines.hpp"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"

#include "capsim/cap_protocol.hpp"
#include "capsim/error.hpp"

using namespace capsim;

namespace {

ErrorCode code_of(auto &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode{};
}

Coisometry identity_rows(std::size_t dim) { return UnitaryMatrix::identity(dim).rows(); }

}  // namespace

TEST(baselines, quantize_finds_planted_state) {
    RngStream rng(1, 0);
    const auto psi = haar_state(5, rng);
    std::vector<StateVector> words;
    for (int i = 0; i < 30; ++i) words.push_back(haar_state(5, rng));
    words[17] = psi;
    const Codebook cb(words);
    EXPECT_EQ(quantize(psi, cb), 17u);
    EXPECT_NEAR(fidelity(cb[17], psi), 1.0, 1e-12);
}

TEST(baselines, quantize_single_word_and_ties) {
    RngStream rng(2, 0);
    const auto psi = haar_state(3, rng);
    EXPECT_EQ(quantize(psi, random_codebook(3, 1, rng)), 0u);
    const auto w = haar_state(3, rng);
    const Codebook dup({w, w, w});
    EXPECT_EQ(quantize(psi, dup), 0u);
}

TEST(baselines, quantize_matches_linear_scan) {
    for (uint64_t s = 0; s < 50; ++s) {
        RngStream rng(3, s);
        const auto cb = random_codebook(6, 40, rng);
        const auto psi = haar_state(6, rng);
        std::size_t best = 0;
        for (std::size_t i = 1; i < cb.size(); ++i) {
            if (fidelity(cb[i], psi) > fidelity(cb[best], psi)) best = i;
        }
        EXPECT_EQ(quantize(psi, cb), best);
    }
}

TEST(baselines, quantize_validation) {
    RngStream rng(0, 0);
    EXPECT_EQ(code_of([&] { random_codebook(2, 0, rng); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([&] { Codebook({StateVector::basis(2, 0), StateVector::basis(3, 0)}); }),
              ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([&] { quantize(StateVector::basis(3, 0), random_codebook(2, 4, rng)); }),
              ErrorCode::DimensionMismatch);
}

TEST(baselines, qubit_net_infidelity_is_minimum_of_uniforms) {
    const int n = 3000;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        RngStream rng(4, i);
        const auto cb = random_codebook(2, 256, rng);
        const auto psi = haar_state(2, rng);
        acc += 1.0 - fidelity(cb[quantize(psi, cb)], psi);
    }
    EXPECT_NEAR(acc / n, 1.0 / 257.0, 0.2 / 257.0);
}

TEST(baselines, ontic_cost_values) {
    EXPECT_NEAR(ontic_cost(4, 0.1, 5.0), 8.0 * std::log2(50.0), 1e-12);
    EXPECT_NEAR(ontic_cost(4, 0.1, 5.0), 45.15, 0.005);
    EXPECT_EQ(ontic_cost(7, 2.5, 5.0), 14.0);
    for (std::size_t dim = 1; dim < 1000; dim *= 3) {
        EXPECT_EQ(ontic_cost(2 * dim, 0.01, 5.0), 2.0 * ontic_cost(dim, 0.01, 5.0));
    }
    EXPECT_EQ(code_of([] { ontic_cost(4, 0.0, 5.0); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { ontic_cost(4, 6.0, 5.0); }), ErrorCode::InvalidArgument);
}

TEST(baselines, ontic_run_uses_codeword) {
    const auto e0 = StateVector::basis(2, 0);
    const Codebook cb({e0});
    RngStream rng(5, 0);
    int hits = 0;
    for (int i = 0; i < 1000; ++i) hits += ontic_run(StateVector::basis(2, 1), e0, cb, rng) == Outcome::Phi;
    EXPECT_EQ(hits, 1000);
}

TEST(baselines, jl_project_identity) {
    RngStream rng(6, 0);
    const auto v = haar_state(8, rng);
    const auto w = jl_project(v, UnitaryMatrix::identity(8), 8);
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(v[i], w[i]);
}

TEST(baselines, jl_project_normalizes) {
    for (uint64_t s = 0; s < 30; ++s) {
        RngStream rng(7, s);
        const auto v = haar_state(40, rng);
        const auto rows = haar_coisometry(40, 9, rng);
        const auto w = jl_project(v, rows, 9);
        EXPECT_EQ(w.dim(), 9u);
        EXPECT_NEAR(norm(w.amps()), 1.0, 1e-12);
        const auto u = haar_unitary(40, rng);
        EXPECT_NEAR(norm(jl_project(v, u, 5).amps()), 1.0, 1e-12);
    }
}

TEST(baselines, jl_project_errors) {
    const auto last = StateVector::basis(4, 3);
    EXPECT_EQ(code_of([&] { jl_project(last, identity_rows(4), 2); }), ErrorCode::DegenerateProjection);
    EXPECT_EQ(code_of([&] { jl_project(last, identity_rows(3), 2); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([&] { jl_project(last, identity_rows(4), 5); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { JLParams{4, 5, 2}.validate(); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { JLParams{4, 2, 0}.validate(); }), ErrorCode::InvalidArgument);
}

TEST(baselines, lossless_projection_reproduces_born_rule) {
    RngStream rng(8, 0);
    const auto psi = haar_state(6, rng);
    const auto phi = haar_state(6, rng);
    std::vector<StateVector> words{haar_state(6, rng), psi, haar_state(6, rng)};
    const double p = jl_outcome_prob(psi, phi, identity_rows(6), Codebook(words));
    EXPECT_NEAR(p, fidelity(psi, phi), 1e-12);
}

TEST(baselines, dense_net_limits) {
    const JLParams jl{2, 2, 4096};
    RngStream pr(9, 0);
    const auto psi = haar_state(2, pr);
    const auto perp = orthogonal_complement_sample(psi, pr);
    int same = 0, orth = 0;
    const int n = 2000;
    for (int i = 0; i < n; ++i) {
        RngStream rng(10, i);
        same += jl_protocol_run(psi, psi, jl, rng) == Outcome::Phi;
        orth += jl_protocol_run(psi, perp, jl, rng) == Outcome::Phi;
    }
    EXPECT_GE(same, n - 20);
    EXPECT_LE(orth, 20);
}

TEST(baselines, cost_formulas) {
    EXPECT_EQ(jl_run_cost_bits({16, 4, 1024}), 10.0);
    EXPECT_NEAR(jl_total_cost(0.1, 0.1, 5.0, 0.5), 50.0 * std::log2(50.0), 1e-10);
    EXPECT_EQ(code_of([] { jl_total_cost(0.1, 0.1, 5.0, 0.0); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { jl_total_cost(0.0, 0.1, 5.0, 1.0); }), ErrorCode::InvalidArgument);
}

TEST(baselines, weak_saturates_while_strong_grows) {
    // The ratio nearly doubles per qubit once N is well above 1 / delta.
    for (auto [delta, first] : std::vector<std::pair<double, int>>{{0.2, 4}, {0.1, 4}, {0.01, 8}}) {
        double prev_ratio = 0.0;
        for (int n = first; n <= 20; ++n) {
            const std::size_t dim = std::size_t{1} << n;
            const double ratio = ontic_cost(dim, delta, 5.0) / cap::asym_cost_for_error(dim, delta);
            if (n > first) EXPECT_GE(ratio / prev_ratio, 1.8) << "delta " << delta << " n " << n;
            prev_ratio = ratio;
        }
    }
}

TEST(baselines, probe_states) {
    RngStream rng(11, 0);
    const auto psi = haar_state(7, rng);
    for (double f : {0.0, 0.2, 0.999, 1.0}) EXPECT_NEAR(fidelity(state_with_fidelity(psi, f, rng), psi), f, 1e-12);
    EXPECT_THROW(state_with_fidelity(psi, 1.5, rng), Error);
    double acc = 0.0;
    for (int i = 0; i < 20000; ++i) acc += fidelity(random_probe(psi, rng), psi);
    EXPECT_NEAR(acc / 20000, 0.5, 0.01);
}

TEST(baselines, full_projection_has_no_error) {
    const auto s = jl_scaling(16, {16}, 200, 1);
    EXPECT_LT(s.rows[0].rms_error, 1e-12);
}

TEST(baselines, projection_error_falls_with_subspace_dimension) {
    const auto s = jl_scaling(128, {4, 8, 16, 32}, 400, 2);
    for (std::size_t i = 1; i < s.rows.size(); ++i) EXPECT_LT(s.rows[i].rms_error, s.rows[i - 1].rms_error);
    EXPECT_LT(s.slope, -0.3);
    EXPECT_GT(s.slope, -0.8);
    EXPECT_GT(s.beta, 0.0);
}

TEST(baselines, projection_scaling_ignores_thread_count) {
    const auto a = jl_scaling(32, {4, 8}, 300, 3, 1);
    const auto b = jl_scaling(32, {4, 8}, 300, 3, 3);
    for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i].rms_error, b.rows[i].rms_error);
    EXPECT_EQ(a.slope, b.slope);
}

TEST(baselines, projection_scaling_validation) {
    EXPECT_EQ(code_of([] { jl_scaling(8, {9}, 10, 0); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { jl_scaling(8, {}, 10, 0); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { jl_scaling(8, {4}, 0, 0); }), ErrorCode::InvalidArgument);
}
