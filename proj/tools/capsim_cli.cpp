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

// capsim command-line front end. Every subcommand maps onto one experiment
// of the C API and writes CSV or JSON to --output or standard output.
//
// Exit codes: 0 success, 2 invalid flags or parameters, 3 budget exceeded,
// 1 anything else.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "capsim/capsim.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError {
    std::string message;
};

struct Output {
    std::string path;
    std::string format = "csv";
    unsigned threads = 0;
};

struct DimFlags {
    std::vector<std::size_t> dims;
    std::vector<int> qubits;
};

struct ReportDeleter {
    void operator()(capsim_report *r) const { capsim_report_free(r); }
};
using ReportPtr = std::unique_ptr<capsim_report, ReportDeleter>;

void add_output_flags(CLI::App *cmd, Output &out) {
    cmd->add_option("--output,-o", out.path, "Write results to PATH instead of standard output");
    cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    cmd->add_option("--threads", out.threads, "Worker threads (0 = all cores); never changes the output")
        ->capture_default_str();
}

void add_dim_flags(CLI::App *cmd, DimFlags &d, bool repeatable) {
    CLI::Option *dim = nullptr;
    CLI::Option *qubits = nullptr;
    if (repeatable) {
        dim = cmd->add_option("--dim", d.dims, "Hilbert-space dimension N (repeatable)");
        qubits = cmd->add_option("-n,--qubits", d.qubits, "Qubit count n, N = 2^n (repeatable)");
    } else {
        dim = cmd->add_option("--dim", d.dims, "Hilbert-space dimension N")->expected(1);
        qubits = cmd->add_option("-n,--qubits", d.qubits, "Qubit count n, N = 2^n")->expected(1);
    }
    dim->excludes(qubits);
}

std::vector<std::size_t> resolve_dims(const DimFlags &d) {
    if (d.dims.empty() && d.qubits.empty()) throw UsageError{"missing required flag --dim (or --qubits)"};
    if (!d.dims.empty()) return d.dims;
    std::vector<std::size_t> out;
    for (int n : d.qubits) {
        if (n < 0 || n > 40) throw UsageError{"--qubits must lie in [0, 40]"};
        out.push_back(std::size_t{1} << n);
    }
    return out;
}

int status_exit(capsim_status s) {
    switch (s) {
        case CAPSIM_OK:
            return kExitOk;
        case CAPSIM_ERR_INVALID_ARGUMENT:
        case CAPSIM_ERR_DIMENSION_MISMATCH:
        case CAPSIM_ERR_INVALID_DIMENSION:
        case CAPSIM_ERR_CONSTRAINT:
        case CAPSIM_ERR_INFINITE_COST:
            return kExitUsage;
        case CAPSIM_ERR_BUDGET:
            return kExitBudget;
        default:
            return kExitFailure;
    }
}

int emit(capsim_status status, capsim_report *raw, const Output &out) {
    ReportPtr report(raw);
    if (status != CAPSIM_OK) {
        std::cerr << "capsim: " << capsim_status_name(status) << ": " << capsim_last_error() << "\n";
        return status_exit(status);
    }
    char *text = nullptr;
    std::size_t len = 0;
    const capsim_format fmt = out.format == "json" ? CAPSIM_FORMAT_JSON : CAPSIM_FORMAT_CSV;
    if (capsim_report_render(report.get(), fmt, &text, &len) != CAPSIM_OK) {
        std::cerr << "capsim: " << capsim_last_error() << "\n";
        return kExitFailure;
    }
    std::unique_ptr<char, void (*)(char *)> guard(text, capsim_string_free);
    if (out.path.empty()) {
        std::cout.write(text, static_cast<std::streamsize>(len));
        std::cout.flush();
        return std::cout ? kExitOk : kExitFailure;
    }
    std::ofstream f(out.path, std::ios::binary | std::ios::trunc);
    f.write(text, static_cast<std::streamsize>(len));
    if (!f) {
        std::cerr << "capsim: cannot write " << out.path << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

capsim_model parse_model(const std::string &name) {
    if (name == "ks-qubit") return CAPSIM_MODEL_KS_QUBIT;
    if (name == "cap") return CAPSIM_MODEL_CAP;
    if (name == "cap-fc") return CAPSIM_MODEL_CAP_FC;
    if (name == "jl") return CAPSIM_MODEL_JL;
    return CAPSIM_MODEL_ONTIC;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"capsim: weak and strong classical simulation of quantum communication"};
    app.require_subcommand(1);
    app.set_version_flag("--version", capsim_version());

    // simulate
    Output sim_out;
    DimFlags sim_dims;
    std::string sim_model;
    std::optional<double> sim_theta, sim_delta;
    std::uint64_t sim_trials = 100000, sim_seed = 0;
    std::size_t sim_ns = 0, sim_net = 256, sim_probes = 4;
    double sim_conf = 0.99;
    auto *simulate = app.add_subcommand("simulate", "Estimate outcome probabilities of one protocol");
    simulate->add_option("--model", sim_model, "Protocol model")
        ->required()
        ->check(CLI::IsMember({"ks-qubit", "cap", "cap-fc", "jl", "ontic"}));
    add_dim_flags(simulate, sim_dims, false);
    auto *sim_theta_opt = simulate->add_option("--theta-c", sim_theta, "Cap half-angle in radians");
    simulate->add_option("--delta", sim_delta, "Target worst-case error (alternative to --theta-c)")
        ->excludes(sim_theta_opt);
    simulate->add_option("--trials", sim_trials, "Shots per probe")->capture_default_str();
    simulate->add_option("--seed", sim_seed, "Master seed")->capture_default_str();
    simulate->add_option("--ns", sim_ns, "Subspace dimension N_s (jl)");
    simulate->add_option("--net-size", sim_net, "Codebook size M (jl, ontic)")->capture_default_str();
    simulate->add_option("--probes", sim_probes, "Random measurement directions besides phi = psi and phi ⟂ psi")
        ->capture_default_str();
    simulate->add_option("--confidence", sim_conf, "Wilson interval confidence")->capture_default_str();
    add_output_flags(simulate, sim_out);

    // error-sweep
    Output sw_out;
    DimFlags sw_dims;
    std::vector<double> sw_thetas, sw_deltas;
    std::uint64_t sw_trials = 100000, sw_probe_trials = 0, sw_seed = 0;
    std::size_t sw_probes = 32;
    auto *sweep = app.add_subcommand("error-sweep", "Analytic vs Monte Carlo error of the cap protocol");
    add_dim_flags(sweep, sw_dims, true);
    auto *sw_theta_opt = sweep->add_option("--theta-c", sw_thetas, "Cap half-angles in radians (repeatable)");
    sweep->add_option("--delta", sw_deltas, "Target errors (repeatable, alternative to --theta-c)")
        ->excludes(sw_theta_opt);
    sweep->add_option("--trials", sw_trials, "Shots at phi = psi and phi ⟂ psi")->capture_default_str();
    sweep->add_option("--probe-trials", sw_probe_trials, "Shots per random probe (0 = trials/10)")
        ->capture_default_str();
    sweep->add_option("--probes", sw_probes, "Random probes per configuration")->capture_default_str();
    sweep->add_option("--seed", sw_seed, "Master seed")->capture_default_str();
    add_output_flags(sweep, sw_out);

    // cost-curve
    Output cc_out;
    DimFlags cc_dims;
    std::vector<double> cc_deltas;
    double cc_alpha = 5.0;
    std::optional<double> cc_beta;
    std::uint64_t cc_trials = 1000, cc_seed = 0;
    auto *curve = app.add_subcommand("cost-curve", "Communication cost against error for all protocols");
    add_dim_flags(curve, cc_dims, false);
    curve->add_option("--delta", cc_deltas, "Errors to tabulate (repeatable; default grid 0.2 .. 0.001)");
    curve->add_option("--alpha", cc_alpha, "Net constant alpha")->capture_default_str();
    curve->add_option("--beta", cc_beta, "Projection constant beta (default: fitted at N=256, N_s=64)");
    curve->add_option("--trials", cc_trials, "Trials for the beta fit")->capture_default_str();
    curve->add_option("--seed", cc_seed, "Master seed for the beta fit")->capture_default_str();
    add_output_flags(curve, cc_out);

    // gap
    Output gap_out;
    int gap_qubits = -1;
    double gap_delta = 0.0, gap_alpha = 5.0;
    auto *gap = app.add_subcommand("gap", "Weak vs strong communication cost for n = 0..qubits");
    gap->add_option("-n,--qubits", gap_qubits, "Largest qubit count")->required();
    gap->add_option("--delta", gap_delta, "Worst-case error")->required();
    gap->add_option("--alpha", gap_alpha, "Net constant alpha")->capture_default_str();
    add_output_flags(gap, gap_out);

    // fc-run
    Output fc_out;
    DimFlags fc_dims;
    std::optional<double> fc_theta, fc_delta;
    std::uint64_t fc_trials = 100000, fc_seed = 0;
    auto *fc = app.add_subcommand("fc-run", "Finite-communication encoding: index entropy and code length");
    add_dim_flags(fc, fc_dims, false);
    auto *fc_theta_opt = fc->add_option("--theta-c", fc_theta, "Cap half-angle in radians");
    fc->add_option("--delta", fc_delta, "Target worst-case error (alternative to --theta-c)")->excludes(fc_theta_opt);
    fc->add_option("--trials", fc_trials, "Independent encodings")->capture_default_str();
    fc->add_option("--seed", fc_seed, "Master seed")->capture_default_str();
    add_output_flags(fc, fc_out);

    // jl-sweep
    Output jl_out;
    DimFlags jl_dims;
    std::vector<std::size_t> jl_ns;
    std::uint64_t jl_trials = 1000, jl_seed = 0;
    auto *jl = app.add_subcommand("jl-sweep", "Projection error against subspace dimension");
    add_dim_flags(jl, jl_dims, false);
    jl->add_option("--ns", jl_ns, "Subspace dimensions N_s (repeatable; default 8..128)");
    jl->add_option("--trials", jl_trials, "Random (psi, phi, U) per N_s")->capture_default_str();
    jl->add_option("--seed", jl_seed, "Master seed")->capture_default_str();
    add_output_flags(jl, jl_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        capsim_report *report = nullptr;
        if (*simulate) {
            capsim_simulate_config cfg;
            capsim_simulate_config_init(&cfg);
            cfg.model = parse_model(sim_model);
            cfg.dim = cfg.model == CAPSIM_MODEL_KS_QUBIT && sim_dims.dims.empty() && sim_dims.qubits.empty()
                          ? 2
                          : resolve_dims(sim_dims).front();
            const bool cap_model = cfg.model == CAPSIM_MODEL_CAP || cfg.model == CAPSIM_MODEL_CAP_FC;
            if (cap_model && !sim_theta && !sim_delta) throw UsageError{"missing required flag --theta-c (or --delta)"};
            if (!cap_model && (sim_theta || sim_delta)) {
                throw UsageError{"--theta-c and --delta apply only to the cap and cap-fc models"};
            }
            if (cfg.model == CAPSIM_MODEL_JL && sim_ns == 0) throw UsageError{"missing required flag --ns"};
            cfg.theta_c = sim_theta.value_or(0.0);
            cfg.delta = sim_delta.value_or(0.0);
            cfg.subdim = sim_ns;
            cfg.net_size = sim_net;
            cfg.trials = sim_trials;
            cfg.seed = sim_seed;
            cfg.threads = sim_out.threads;
            cfg.random_probes = sim_probes;
            cfg.confidence = sim_conf;
            const capsim_status s = capsim_run_simulate(&cfg, &report);
            return emit(s, report, sim_out);
        }
        if (*sweep) {
            const auto dims = resolve_dims(sw_dims);
            if (sw_thetas.empty() && sw_deltas.empty()) throw UsageError{"missing required flag --theta-c (or --delta)"};
            capsim_error_sweep_config cfg;
            capsim_error_sweep_config_init(&cfg);
            cfg.dims = dims.data();
            cfg.n_dims = dims.size();
            cfg.thetas = sw_thetas.data();
            cfg.n_thetas = sw_thetas.size();
            cfg.deltas = sw_deltas.data();
            cfg.n_deltas = sw_deltas.size();
            cfg.trials = sw_trials;
            cfg.probe_trials = sw_probe_trials;
            cfg.probes = sw_probes;
            cfg.seed = sw_seed;
            cfg.threads = sw_out.threads;
            const capsim_status s = capsim_run_error_sweep(&cfg, &report);
            return emit(s, report, sw_out);
        }
        if (*curve) {
            capsim_cost_curve_config cfg;
            capsim_cost_curve_config_init(&cfg);
            cfg.dim = resolve_dims(cc_dims).front();
            cfg.deltas = cc_deltas.empty() ? nullptr : cc_deltas.data();
            cfg.n_deltas = cc_deltas.size();
            cfg.alpha = cc_alpha;
            if (cc_beta && !(*cc_beta > 0.0)) throw UsageError{"--beta must be positive"};
            cfg.beta = cc_beta.value_or(0.0);
            cfg.fit_trials = cc_trials;
            cfg.seed = cc_seed;
            cfg.threads = cc_out.threads;
            const capsim_status s = capsim_run_cost_curve(&cfg, &report);
            return emit(s, report, cc_out);
        }
        if (*gap) {
            capsim_gap_config cfg;
            capsim_gap_config_init(&cfg);
            cfg.qubits = gap_qubits;
            cfg.delta = gap_delta;
            cfg.alpha = gap_alpha;
            const capsim_status s = capsim_run_gap(&cfg, &report);
            return emit(s, report, gap_out);
        }
        if (*fc) {
            if (!fc_theta && !fc_delta) throw UsageError{"missing required flag --theta-c (or --delta)"};
            capsim_fc_config cfg;
            capsim_fc_config_init(&cfg);
            cfg.dim = resolve_dims(fc_dims).front();
            cfg.theta_c = fc_theta.value_or(0.0);
            cfg.delta = fc_delta.value_or(0.0);
            cfg.trials = fc_trials;
            cfg.seed = fc_seed;
            cfg.threads = fc_out.threads;
            const capsim_status s = capsim_run_fc(&cfg, &report);
            return emit(s, report, fc_out);
        }
        if (*jl) {
            capsim_jl_config cfg;
            capsim_jl_config_init(&cfg);
            cfg.dim = resolve_dims(jl_dims).front();
            cfg.subdims = jl_ns.empty() ? nullptr : jl_ns.data();
            cfg.n_subdims = jl_ns.size();
            cfg.trials = jl_trials;
            cfg.seed = jl_seed;
            cfg.threads = jl_out.threads;
            const capsim_status s = capsim_run_jl_sweep(&cfg, &report);
            return emit(s, report, jl_out);
        }
    } catch (const UsageError &e) {
        std::cerr << "capsim: " << e.message << "\nRun with --help for usage.\n";
        return kExitUsage;
    }
    return kExitUsage;
}
