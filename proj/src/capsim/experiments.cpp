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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "capsim/error.hpp"
#include "capsim/parallel.hpp"

namespace capsim {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Stream tags. Changing any of these changes every published number.
constexpr uint64_t kTagSimPsi = 0x01;
constexpr uint64_t kTagSimProbe = 0x02;
constexpr uint64_t kTagSimCase = 0x03;
constexpr uint64_t kTagSweepPsi = 0x11;
constexpr uint64_t kTagSweepParallel = 0x12;
constexpr uint64_t kTagSweepOrthogonal = 0x13;
constexpr uint64_t kTagSweepProbe = 0x14;

struct Tally {
    uint64_t successes = 0;
    double bits = 0.0;
};

int64_t as_int(std::size_t v) { return static_cast<int64_t>(v); }
int64_t as_int(bool v) { return v ? 1 : 0; }

double sigma_at(double p, uint64_t n) { return std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n)); }

}  // namespace

std::string_view model_name(ModelKind m) {
    switch (m) {
        case ModelKind::KsQubit:
            return "ks-qubit";
        case ModelKind::Cap:
            return "cap";
        case ModelKind::CapFc:
            return "cap-fc";
        case ModelKind::Jl:
            return "jl";
        case ModelKind::Ontic:
            return "ontic";
    }
    return "?";
}

ModelKind parse_model(std::string_view name) {
    for (ModelKind m : {ModelKind::KsQubit, ModelKind::Cap, ModelKind::CapFc, ModelKind::Jl, ModelKind::Ontic}) {
        if (model_name(m) == name) return m;
    }
    fail(ErrorCode::InvalidArgument, "unknown model '" + std::string(name) + "'");
}

Model Model::ks_qubit() { return Model{ModelKind::KsQubit, 2, std::nullopt, 0, 0}; }

Model Model::cap_model(const CapParams &p) { return Model{ModelKind::Cap, p.dim(), p, 0, 0}; }

Model Model::cap_fc(const CapParams &p) { return Model{ModelKind::CapFc, p.dim(), p, 0, 0}; }

Model Model::jl(const JLParams &jl) {
    jl.validate();
    return Model{ModelKind::Jl, jl.dim, std::nullopt, jl.subdim, jl.net_size};
}

Model Model::ontic(std::size_t dim, std::size_t net_size) {
    Model m{ModelKind::Ontic, dim, std::nullopt, 0, net_size};
    m.validate();
    return m;
}

void Model::validate() const {
    switch (kind) {
        case ModelKind::KsQubit:
            if (dim != 2) fail(ErrorCode::InvalidDimension, "ks-qubit model requires dimension 2");
            break;
        case ModelKind::Cap:
        case ModelKind::CapFc:
            if (!cap) fail(ErrorCode::InvalidArgument, "cap models need cap parameters");
            if (cap->dim() != dim) fail(ErrorCode::DimensionMismatch, "cap parameters disagree with model dimension");
            if (!cap->in_error_regime()) fail(ErrorCode::ConstraintViolation, "tan^2(theta_c) must be below N");
            break;
        case ModelKind::Jl:
            JLParams{dim, subdim, net_size}.validate();
            break;
        case ModelKind::Ontic:
            if (dim == 0) fail(ErrorCode::InvalidDimension, "dimension must be at least 1");
            if (net_size == 0) fail(ErrorCode::InvalidArgument, "net size must be >= 1");
            break;
    }
}

Shot run_shot(const Model &m, const StateVector &psi, const StateVector &phi, RngStream &rng) {
    switch (m.kind) {
        case ModelKind::KsQubit:
            return {ks::respond(ks::sample_ontic(psi, rng), phi), kInf};
        case ModelKind::Cap:
            return {cap::respond(cap::sample(psi, *m.cap, rng), phi, *m.cap, rng), kInf};
        case ModelKind::CapFc: {
            const SharedRandomness shared(rng.next_u64(), m.dim);
            const Transcript sent = alice_encode(psi, *m.cap, shared);
            const Transcript received = Transcript::from_wire(sent.to_wire(), *m.cap);
            const StateVector x = bob_decode(received, *m.cap, shared);
            return {cap::respond(x, phi, *m.cap, rng), static_cast<double>(sent.bit_len())};
        }
        case ModelKind::Jl: {
            const JLParams jl{m.dim, m.subdim, m.net_size};
            return {jl_protocol_run(psi, phi, jl, rng), jl_run_cost_bits(jl)};
        }
        case ModelKind::Ontic: {
            const Codebook cb = random_codebook(m.dim, m.net_size, rng);
            return {ontic_run(psi, phi, cb, rng), std::log2(static_cast<double>(m.net_size))};
        }
    }
    fail(ErrorCode::InvalidArgument, "unknown model");
}

OutcomeEstimate estimate_outcome_prob(const Model &m, const StateVector &psi, const StateVector &phi, uint64_t trials,
                                      uint64_t seed, unsigned threads, double confidence) {
    m.validate();
    if (trials < kMinEstimateTrials) {
        fail(ErrorCode::InvalidArgument, "outcome estimates need at least " + std::to_string(kMinEstimateTrials) +
                                             " trials");
    }
    if (psi.dim() != m.dim || phi.dim() != m.dim) fail(ErrorCode::DimensionMismatch, "state dimension mismatch");
    const auto chunks = map_chunks<Tally>(trials, threads, [&](std::size_t b, std::size_t e) {
        Tally t;
        for (std::size_t i = b; i < e; ++i) {
            RngStream rng(seed, i);
            const Shot s = run_shot(m, psi, phi, rng);
            if (s.outcome == Outcome::Phi) ++t.successes;
            t.bits += s.bits;
        }
        return t;
    });
    Tally total;
    for (const Tally &t : chunks) {
        total.successes += t.successes;
        total.bits += t.bits;
    }
    return {wilson(total.successes, trials, confidence), total.bits / static_cast<double>(trials)};
}

Table simulate(const SimulateConfig &cfg) {
    const Model &m = cfg.model;
    m.validate();
    if (cfg.trials < kMinEstimateTrials) {
        fail(ErrorCode::InvalidArgument, "simulate needs at least " + std::to_string(kMinEstimateTrials) + " trials");
    }

    RngStream psi_rng(derive_seed(cfg.seed, kTagSimPsi), 0);
    const StateVector psi = haar_state(m.dim, psi_rng);
    RngStream probe_rng(derive_seed(cfg.seed, kTagSimProbe), 0);

    std::vector<std::pair<std::string, StateVector>> cases;
    cases.emplace_back("parallel", psi);
    if (m.dim >= 2) cases.emplace_back("orthogonal", orthogonal_complement_sample(psi, probe_rng));
    for (std::size_t j = 0; j < cfg.random_probes && m.dim >= 2; ++j) {
        cases.emplace_back("random_" + std::to_string(j), random_probe(psi, probe_rng));
    }

    double bound = kNaN;
    if (m.kind == ModelKind::KsQubit) bound = 0.0;
    if (m.cap) bound = cap::error_report(*m.cap).delta;

    Table t;
    t.experiment = "simulate";
    t.columns = {"case",  "dim",       "born_prob", "mean",        "ci_low",
                 "ci_high", "trials", "deviation", "delta_bound", "mean_bits"};
    t.config["model"] = std::string(model_name(m.kind));
    t.config["dim"] = m.dim;
    if (m.cap) t.config["theta_c"] = json_number(m.cap->theta_c());
    if (m.kind == ModelKind::Jl) t.config["subdim"] = m.subdim;
    if (m.kind == ModelKind::Jl || m.kind == ModelKind::Ontic) t.config["net_size"] = m.net_size;
    t.config["trials"] = cfg.trials;
    t.config["seed"] = cfg.seed;
    t.config["confidence"] = json_number(cfg.confidence);
    t.config["random_probes"] = cfg.random_probes;

    for (std::size_t c = 0; c < cases.size(); ++c) {
        const auto &[name, phi] = cases[c];
        const double born = fidelity(psi, phi);
        const OutcomeEstimate est =
            estimate_outcome_prob(m, psi, phi, cfg.trials, derive_seed(cfg.seed, kTagSimCase, c), cfg.threads,
                                  cfg.confidence);
        t.add_row({name, as_int(m.dim), born, est.ci.mean, est.ci.ci_low, est.ci.ci_high,
                   static_cast<int64_t>(cfg.trials), est.ci.mean - born, bound, est.mean_bits});
    }

    if (m.cap) {
        const ErrorReport er = cap::error_report(*m.cap);
        const CostReport cr = cap::cost_report(*m.cap);
        t.summary["delta"] = json_number(er.delta);
        t.summary["delta1"] = json_number(er.delta1);
        t.summary["delta2"] = json_number(er.delta2);
        t.summary["mutual_info_bits"] = json_number(cr.mutual_info_bits);
        t.summary["one_shot_upper_bits"] = json_number(cr.one_shot_upper_bits);
    }
    if (m.kind == ModelKind::KsQubit) t.summary["delta"] = 0;
    return t;
}

std::vector<ErrorSweepRow> error_sweep(const ErrorSweepConfig &cfg) {
    if (cfg.dims.empty()) fail(ErrorCode::InvalidArgument, "error sweep needs at least one dimension");
    if (cfg.thetas.empty() == cfg.deltas.empty()) {
        fail(ErrorCode::InvalidArgument, "error sweep needs exactly one of theta_c values and target errors");
    }
    if (cfg.trials < kMinEstimateTrials) fail(ErrorCode::InvalidArgument, "error sweep needs at least 100 trials");
    const uint64_t probe_trials =
        cfg.probe_trials ? cfg.probe_trials : std::max<uint64_t>(kMinEstimateTrials, cfg.trials / 10);
    if (probe_trials < kMinEstimateTrials) fail(ErrorCode::InvalidArgument, "probe trials must be at least 100");

    std::vector<ErrorSweepRow> rows;
    uint64_t row_id = 0;
    for (std::size_t dim : cfg.dims) {
        std::vector<double> thetas = cfg.thetas;
        for (double d : cfg.deltas) {
            const bool ok = dim >= 2 && d > 0.0 && d < cap::max_admissible_error(dim);
            thetas.push_back(ok ? cap::theta_for_error(dim, d) : kNaN);
        }
        for (double theta : thetas) {
            ErrorSweepRow r{dim, theta, std::tan(theta) * std::tan(theta), false};
            const uint64_t id = row_id++;
            const bool valid = dim >= 2 && theta > 0.0 && theta <= M_PI / 2 && r.tan2 < static_cast<double>(dim);
            if (!valid) {
                r.delta1 = r.delta2 = r.parallel_dev = r.orthogonal_dev = kNaN;
                r.parallel_sigma = r.orthogonal_sigma = r.probe_max_abs_dev = r.probe_max_excess = kNaN;
                rows.push_back(r);
                continue;
            }
            r.valid = true;
            const CapParams p = CapParams::create(dim, theta);
            const Model m = Model::cap_model(p);
            const ErrorReport er = cap::error_report(p);
            r.delta1 = er.delta1;
            r.delta2 = er.delta2;

            RngStream psi_rng(derive_seed(cfg.seed, kTagSweepPsi, id), 0);
            const StateVector psi = haar_state(dim, psi_rng);

            const auto par = estimate_outcome_prob(m, psi, psi, cfg.trials,
                                                   derive_seed(cfg.seed, kTagSweepParallel, id), cfg.threads);
            r.parallel_dev = 1.0 - par.ci.mean;
            r.parallel_sigma = sigma_at(1.0 - er.delta1, cfg.trials);
            r.parallel_pass = std::abs(r.parallel_dev - er.delta1) <= kSigmaTolerance * r.parallel_sigma + 1e-12;

            const StateVector perp = orthogonal_complement_sample(psi, psi_rng);
            const auto orth = estimate_outcome_prob(m, psi, perp, cfg.trials,
                                                    derive_seed(cfg.seed, kTagSweepOrthogonal, id), cfg.threads);
            r.orthogonal_dev = orth.ci.mean;
            r.orthogonal_sigma = sigma_at(er.delta2, cfg.trials);
            r.orthogonal_pass = std::abs(r.orthogonal_dev - er.delta2) <= kSigmaTolerance * r.orthogonal_sigma + 1e-12;

            r.probe_max_abs_dev = 0.0;
            r.probe_max_excess = -kInf;
            for (std::size_t j = 0; j < cfg.probes; ++j) {
                const StateVector phi = random_probe(psi, psi_rng);
                const double born = fidelity(psi, phi);
                const auto est = estimate_outcome_prob(
                    m, psi, phi, probe_trials, derive_seed(cfg.seed, kTagSweepProbe, id * 1024 + j), cfg.threads);
                const double dev = std::abs(est.ci.mean - born);
                r.probe_max_abs_dev = std::max(r.probe_max_abs_dev, dev);
                r.probe_max_excess =
                    std::max(r.probe_max_excess, dev - er.delta1 - kSigmaTolerance * est.ci.std_error());
            }
            if (cfg.probes == 0) r.probe_max_excess = kNaN;
            r.probe_pass = cfg.probes == 0 || r.probe_max_excess <= 1e-12;
            rows.push_back(r);
        }
    }
    return rows;
}

Table error_sweep_table(const ErrorSweepConfig &cfg, const std::vector<ErrorSweepRow> &rows) {
    Table t;
    t.experiment = "error-sweep";
    t.columns = {"dim",          "theta_c",       "tan2",           "valid",          "delta1",
                 "delta2",       "parallel_dev",  "parallel_sigma", "parallel_pass",  "orthogonal_dev",
                 "orthogonal_sigma", "orthogonal_pass", "probe_max_abs_dev", "probe_max_excess", "probe_pass",
                 "pass"};
    auto dims = nlohmann::ordered_json::array();
    for (auto d : cfg.dims) dims.push_back(d);
    auto thetas = nlohmann::ordered_json::array();
    for (auto th : cfg.thetas) thetas.push_back(json_number(th));
    auto deltas = nlohmann::ordered_json::array();
    for (auto d : cfg.deltas) deltas.push_back(json_number(d));
    t.config["dims"] = dims;
    if (!cfg.thetas.empty()) t.config["thetas"] = thetas;
    if (!cfg.deltas.empty()) t.config["deltas"] = deltas;
    t.config["trials"] = cfg.trials;
    t.config["probe_trials"] = cfg.probe_trials ? cfg.probe_trials
                                                : std::max<uint64_t>(kMinEstimateTrials, cfg.trials / 10);
    t.config["probes"] = cfg.probes;
    t.config["seed"] = cfg.seed;
    t.config["sigma_tolerance"] = kSigmaTolerance;
    std::size_t passed = 0, valid = 0;
    for (const auto &r : rows) {
        t.add_row({as_int(r.dim), r.theta_c, r.tan2, as_int(r.valid), r.delta1, r.delta2, r.parallel_dev,
                   r.parallel_sigma, as_int(r.parallel_pass), r.orthogonal_dev, r.orthogonal_sigma,
                   as_int(r.orthogonal_pass), r.probe_max_abs_dev, r.probe_max_excess, as_int(r.probe_pass),
                   as_int(r.pass())});
        valid += r.valid;
        passed += r.pass();
    }
    t.summary["valid_rows"] = valid;
    t.summary["passed_rows"] = passed;
    return t;
}

std::vector<GapRow> gap_report(int n_max, double delta, double alpha) {
    if (n_max < 0 || n_max > kMaxGapQubits) {
        fail(ErrorCode::InvalidArgument, "qubit count must lie in [0, " + std::to_string(kMaxGapQubits) + "]");
    }
    if (!(delta > 0.0 && delta < alpha)) fail(ErrorCode::InvalidArgument, "need 0 < delta < alpha");
    std::vector<GapRow> rows;
    for (int n = 0; n <= n_max; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        GapRow r{n, dim, "ok", kNaN, ontic_cost(dim, delta, alpha), kNaN};
        if (dim == 1) {
            // A one-dimensional channel carries nothing.
            r.status = "trivial";
            r.weak_bits = 0.0;
        } else if (delta >= cap::max_admissible_error(dim)) {
            r.status = "inadmissible";
        } else {
            r.weak_bits = cap::asym_cost_for_error(dim, delta);
            r.ratio = r.strong_bits / r.weak_bits;
        }
        rows.push_back(r);
    }
    return rows;
}

Table gap_table(int n_max, double delta, double alpha, const std::vector<GapRow> &rows) {
    Table t;
    t.experiment = "gap";
    t.columns = {"qubits",         "dim",           "status", "weak_bits", "strong_bits", "ratio",
                 "weak_bits_times_delta", "weak_rel_change", "strong_growth"};
    t.config["qubits"] = n_max;
    t.config["delta"] = json_number(delta);
    t.config["alpha"] = json_number(alpha);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const GapRow &r = rows[i];
        double rel = kNaN, growth = kNaN;
        if (i > 0) {
            const GapRow &prev = rows[i - 1];
            if (prev.status == "ok" && r.status == "ok") rel = std::abs(r.weak_bits - prev.weak_bits) / prev.weak_bits;
            growth = r.strong_bits / prev.strong_bits;
        }
        t.add_row({static_cast<int64_t>(r.qubits), as_int(r.dim), r.status, r.weak_bits, r.strong_bits, r.ratio,
                   r.weak_bits * delta, rel, growth});
    }
    if (!rows.empty()) t.summary["weak_bits_times_delta_at_max"] = json_number(rows.back().weak_bits * delta);
    t.summary["high_dim_limit_times_delta"] = json_number(kLog2E / std::exp(1.0));
    return t;
}

std::vector<double> default_delta_grid() { return {0.2, 0.1, 0.05, 0.02, 0.01, 0.005, 0.002, 0.001}; }

Table cost_curve(const CostCurveConfig &cfg) {
    if (cfg.dim < 2) fail(ErrorCode::InvalidDimension, "cost curve needs dimension >= 2");
    if (!(cfg.beta > 0.0)) fail(ErrorCode::InvalidArgument, "beta must be positive");
    if (!(cfg.alpha > 0.0)) fail(ErrorCode::InvalidArgument, "alpha must be positive");
    const std::vector<double> deltas = cfg.deltas.empty() ? default_delta_grid() : cfg.deltas;

    Table t;
    t.experiment = "cost-curve";
    t.columns = {"delta",      "status",   "theta_c", "weak_asym_bits", "weak_one_shot_upper_bits",
                 "general_one_shot_upper_bits", "weak_bits_times_delta", "ontic_bits", "jl_bits"};
    t.config["dim"] = cfg.dim;
    auto ds = nlohmann::ordered_json::array();
    for (double d : deltas) ds.push_back(json_number(d));
    t.config["deltas"] = ds;
    t.config["alpha"] = json_number(cfg.alpha);
    t.config["beta"] = json_number(cfg.beta);

    const double hi = cap::max_admissible_error(cfg.dim);
    for (double d : deltas) {
        if (!(d > 0.0)) fail(ErrorCode::InvalidArgument, "errors must be positive");
        const double ontic = d < cfg.alpha ? ontic_cost(cfg.dim, d, cfg.alpha) : kNaN;
        const double jl = d < cfg.alpha ? jl_total_cost(d, d, cfg.alpha, cfg.beta) : kNaN;
        if (d >= hi) {
            t.add_row({d, std::string("inadmissible"), kNaN, kNaN, kNaN, kNaN, kNaN, ontic, jl});
            continue;
        }
        const double c = cap::asym_cost_for_error(cfg.dim, d);
        const double general = c + 2.0 * std::log2(c + 1.0) + 2.0 * kLog2E;
        t.add_row({d, std::string("ok"), cap::theta_for_error(cfg.dim, d), c, c + kLog2E, general, c * d, ontic, jl});
    }
    return t;
}

Table fc_suite(const CapParams &p, uint64_t trials, uint64_t seed, unsigned threads) {
    const FcCostResult r = fc_cost_experiment(p, trials, seed, threads);
    Table t;
    t.experiment = "fc-run";
    t.columns = {"dim",          "theta_c",     "trials",        "prob_accept",      "mutual_info_bits",
                 "upper_bound_bits", "empirical_entropy_bits", "geometric_entropy_bits", "mean_index",
                 "mean_code_len_bits", "golomb_m", "chi2", "chi2_dof", "chi2_p", "entropy_ok", "code_len_ok",
                 "chi2_ok"};
    t.config["dim"] = p.dim();
    t.config["theta_c"] = json_number(p.theta_c());
    t.config["trials"] = trials;
    t.config["seed"] = seed;
    t.add_row({as_int(p.dim()), p.theta_c(), static_cast<int64_t>(trials), r.prob_accept, r.mutual_info_bits,
               r.mutual_info_bits + kLog2E, r.empirical_entropy_bits, r.geometric_entropy_bits, r.mean_index,
               r.mean_code_len_bits, static_cast<int64_t>(golomb_parameter(r.prob_accept)), r.chi_square.statistic,
               static_cast<int64_t>(r.chi_square.dof), r.chi_square.p_value, as_int(r.entropy_within(0.1)),
               as_int(r.code_len_within(0.1)), as_int(r.chi_square.p_value > 0.01)});
    return t;
}

std::vector<std::size_t> default_subdims(std::size_t dim) {
    std::vector<std::size_t> out;
    for (std::size_t ns = 8; ns <= 128 && ns <= dim; ns *= 2) out.push_back(ns);
    if (out.empty()) out.push_back(dim);
    return out;
}

Table jl_suite(const JLSuiteConfig &cfg) {
    const std::vector<std::size_t> subdims = cfg.subdims.empty() ? default_subdims(cfg.dim) : cfg.subdims;
    const JLScaling s = jl_scaling(cfg.dim, subdims, cfg.trials, cfg.seed, cfg.threads);
    Table t;
    t.experiment = "jl-sweep";
    t.columns = {"dim", "subdim", "trials", "rms_error", "rms_std_error", "fitted_slope", "beta"};
    t.config["dim"] = cfg.dim;
    auto ns = nlohmann::ordered_json::array();
    for (auto n : subdims) ns.push_back(n);
    t.config["subdims"] = ns;
    t.config["trials"] = cfg.trials;
    t.config["seed"] = cfg.seed;
    for (const auto &r : s.rows) {
        t.add_row({as_int(cfg.dim), as_int(r.subdim), static_cast<int64_t>(cfg.trials), r.rms_error, r.rms_std_error,
                   s.slope, s.beta});
    }
    t.summary["fitted_slope"] = json_number(s.slope);
    t.summary["slope_in_window"] = s.slope >= kJlSlopeLow && s.slope <= kJlSlopeHigh;
    t.summary["beta"] = json_number(s.beta);
    return t;
}

}  // namespace capsim
