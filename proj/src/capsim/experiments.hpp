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

// Monte Carlo harness and the named experiment suites. Every trial draws
// from its own stream (seed, trial index), so results are a function of the
// configuration alone and not of the worker count.

#ifndef CAPSIM_EXPERIMENTS_HPP
#define CAPSIM_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "capsim/baselines.hpp"
#include "capsim/cap_protocol.hpp"
#include "capsim/fc_channel.hpp"
#include "capsim/report.hpp"
#include "capsim/stats.hpp"

namespace capsim {

enum class ModelKind { KsQubit, Cap, CapFc, Jl, Ontic };

std::string_view model_name(ModelKind m);
ModelKind parse_model(std::string_view name);

/// A fully specified simulation model.
struct Model {
    ModelKind kind = ModelKind::Cap;
    std::size_t dim = 2;
    std::optional<CapParams> cap;  // Cap, CapFc
    std::size_t subdim = 0;        // Jl
    std::size_t net_size = 0;      // Jl, Ontic

    static Model ks_qubit();
    static Model cap_model(const CapParams &p);
    static Model cap_fc(const CapParams &p);
    static Model jl(const JLParams &jl);
    static Model ontic(std::size_t dim, std::size_t net_size);

    void validate() const;
};

struct Shot {
    Outcome outcome;
    double bits;  // communication spent; +inf for continuous messages
};

/// One protocol run from preparation psi to measurement {phi, 1 - phi}.
Shot run_shot(const Model &m, const StateVector &psi, const StateVector &phi, RngStream &rng);

struct OutcomeEstimate {
    EstimateCI ci;
    double mean_bits = 0.0;
};

inline constexpr uint64_t kMinEstimateTrials = 100;

/// Frequency of Phi over `trials` independent shots with Wilson interval.
OutcomeEstimate estimate_outcome_prob(const Model &m, const StateVector &psi, const StateVector &phi, uint64_t trials,
                                      uint64_t seed, unsigned threads = 0, double confidence = 0.99);

/// simulate: one Haar psi, probed with phi = psi, phi orthogonal to psi and
/// `random_probes` random directions.
struct SimulateConfig {
    Model model;
    uint64_t trials = 100000;
    uint64_t seed = 0;
    unsigned threads = 0;
    std::size_t random_probes = 4;
    double confidence = 0.99;
};
Table simulate(const SimulateConfig &cfg);

struct ErrorSweepRow {
    std::size_t dim;
    double theta_c;
    double tan2;
    bool valid;
    double delta1 = 0.0;
    double delta2 = 0.0;
    double parallel_dev = 0.0;  // 1 - P(Phi) at phi = psi
    double parallel_sigma = 0.0;
    double orthogonal_dev = 0.0;  // P(Phi) at phi orthogonal to psi
    double orthogonal_sigma = 0.0;
    double probe_max_abs_dev = 0.0;
    double probe_max_excess = 0.0;  // max over probes of |dev| - delta1 - 4 sigma
    bool parallel_pass = false;
    bool orthogonal_pass = false;
    bool probe_pass = false;

    bool pass() const { return valid && parallel_pass && orthogonal_pass && probe_pass; }
};

struct ErrorSweepConfig {
    std::vector<std::size_t> dims;
    std::vector<double> thetas;  // either thetas ...
    std::vector<double> deltas;  // ... or target errors, converted per dimension
    uint64_t trials = 100000;
    uint64_t probe_trials = 0;  // 0: trials / 10, at least 100
    std::size_t probes = 32;
    uint64_t seed = 0;
    unsigned threads = 0;
};

inline constexpr double kSigmaTolerance = 4.0;

std::vector<ErrorSweepRow> error_sweep(const ErrorSweepConfig &cfg);
Table error_sweep_table(const ErrorSweepConfig &cfg, const std::vector<ErrorSweepRow> &rows);

struct GapRow {
    int qubits;
    std::size_t dim;
    std::string status;  // ok, trivial, inadmissible
    double weak_bits;
    double strong_bits;
    double ratio;
};

/// Weak vs strong cost per qubit count n = 0..n_max at fixed error.
std::vector<GapRow> gap_report(int n_max, double delta, double alpha);
Table gap_table(int n_max, double delta, double alpha, const std::vector<GapRow> &rows);

inline constexpr int kMaxGapQubits = 24;

struct CostCurveConfig {
    std::size_t dim = 2;
    std::vector<double> deltas;  // empty: default grid
    double alpha = 5.0;
    double beta = 0.0;           // must be > 0
};
Table cost_curve(const CostCurveConfig &cfg);
std::vector<double> default_delta_grid();

Table fc_suite(const CapParams &p, uint64_t trials, uint64_t seed, unsigned threads = 0);

struct JLSuiteConfig {
    std::size_t dim = 256;
    std::vector<std::size_t> subdims;  // empty: 8..128 in powers of two, capped at dim
    uint64_t trials = 1000;
    uint64_t seed = 0;
    unsigned threads = 0;
};
Table jl_suite(const JLSuiteConfig &cfg);
std::vector<std::size_t> default_subdims(std::size_t dim);

/// Slope window accepted by the JL scaling check.
inline constexpr double kJlSlopeLow = -0.6;
inline constexpr double kJlSlopeHigh = -0.4;

}  // namespace capsim

#endif  // CAPSIM_EXPERIMENTS_HPP
