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

#include "capsim/capsim.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "capsim/baselines.hpp"
#include "capsim/cap_protocol.hpp"
#include "capsim/error.hpp"
#include "capsim/experiments.hpp"
#include "capsim/fc_channel.hpp"
#include "capsim/report.hpp"

struct capsim_state {
    capsim::StateVector v;
};

struct capsim_cap_params {
    capsim::CapParams p;
};

struct capsim_transcript {
    capsim::Transcript t;
};

struct capsim_report {
    capsim::Table table;
};

namespace {

thread_local std::string g_last_error;

capsim_status to_status(capsim::ErrorCode code) {
    using capsim::ErrorCode;
    switch (code) {
        case ErrorCode::InvalidArgument:
            return CAPSIM_ERR_INVALID_ARGUMENT;
        case ErrorCode::DimensionMismatch:
            return CAPSIM_ERR_DIMENSION_MISMATCH;
        case ErrorCode::InvalidDimension:
            return CAPSIM_ERR_INVALID_DIMENSION;
        case ErrorCode::ConstraintViolation:
            return CAPSIM_ERR_CONSTRAINT;
        case ErrorCode::BudgetExceeded:
            return CAPSIM_ERR_BUDGET;
        case ErrorCode::DecodeError:
            return CAPSIM_ERR_DECODE;
        case ErrorCode::DegenerateProjection:
            return CAPSIM_ERR_DEGENERATE;
        case ErrorCode::InfiniteCost:
            return CAPSIM_ERR_INFINITE_COST;
        case ErrorCode::Io:
            return CAPSIM_ERR_IO;
    }
    return CAPSIM_ERR_INTERNAL;
}

capsim_status set_error(capsim_status status, const char *what) {
    g_last_error = what;
    return status;
}

/// Runs fn, translating exceptions into status codes.
template <class Fn>
capsim_status guarded(Fn &&fn) noexcept {
    try {
        fn();
        g_last_error.clear();
        return CAPSIM_OK;
    } catch (const capsim::Error &e) {
        return set_error(to_status(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return set_error(CAPSIM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return set_error(CAPSIM_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(CAPSIM_ERR_INTERNAL, "unknown error");
    }
}

void require(bool cond, const char *what) {
    if (!cond) capsim::fail(capsim::ErrorCode::InvalidArgument, what);
}

/// Cap parameters from exactly one of theta_c / delta (0 means unset).
capsim::CapParams cap_from(std::size_t dim, double theta_c, double delta, bool constrained) {
    const bool has_theta = theta_c != 0.0;
    const bool has_delta = delta != 0.0;
    require(has_theta != has_delta, "exactly one of theta_c and delta must be given");
    if (has_delta) return capsim::CapParams::for_error(dim, delta);
    return constrained ? capsim::CapParams::create(dim, theta_c) : capsim::CapParams::unconstrained(dim, theta_c);
}

capsim::Model model_from(const capsim_simulate_config &c) {
    switch (c.model) {
        case CAPSIM_MODEL_KS_QUBIT:
            require(c.theta_c == 0.0 && c.delta == 0.0, "ks-qubit takes neither theta_c nor delta");
            require(c.dim == 2, "ks-qubit requires dimension 2");
            return capsim::Model::ks_qubit();
        case CAPSIM_MODEL_CAP:
            return capsim::Model::cap_model(cap_from(c.dim, c.theta_c, c.delta, true));
        case CAPSIM_MODEL_CAP_FC:
            return capsim::Model::cap_fc(cap_from(c.dim, c.theta_c, c.delta, true));
        case CAPSIM_MODEL_JL:
            return capsim::Model::jl(capsim::JLParams{c.dim, c.subdim, c.net_size});
        case CAPSIM_MODEL_ONTIC:
            return capsim::Model::ontic(c.dim, c.net_size);
    }
    capsim::fail(capsim::ErrorCode::InvalidArgument, "unknown model");
}

template <class T>
std::vector<T> to_vector(const T *data, std::size_t n) {
    require(n == 0 || data != nullptr, "array pointer is NULL but its length is nonzero");
    return n == 0 ? std::vector<T>{} : std::vector<T>(data, data + n);
}

}  // namespace

extern "C" {

const char *capsim_version(void) { return capsim::kVersion; }

const char *capsim_status_name(capsim_status status) {
    switch (status) {
        case CAPSIM_OK:
            return "ok";
        case CAPSIM_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case CAPSIM_ERR_DIMENSION_MISMATCH:
            return "dimension mismatch";
        case CAPSIM_ERR_INVALID_DIMENSION:
            return "invalid dimension";
        case CAPSIM_ERR_CONSTRAINT:
            return "constraint violation";
        case CAPSIM_ERR_BUDGET:
            return "budget exceeded";
        case CAPSIM_ERR_DECODE:
            return "decode error";
        case CAPSIM_ERR_DEGENERATE:
            return "degenerate projection";
        case CAPSIM_ERR_INFINITE_COST:
            return "infinite cost";
        case CAPSIM_ERR_IO:
            return "i/o error";
        case CAPSIM_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *capsim_last_error(void) { return g_last_error.c_str(); }

capsim_status capsim_state_from_amplitudes(size_t dim, const double *amplitudes, int normalize, capsim_state **out) {
    return guarded([&] {
        require(out != nullptr && amplitudes != nullptr, "NULL argument");
        std::vector<capsim::cplx> amps(dim);
        for (size_t i = 0; i < dim; ++i) amps[i] = {amplitudes[2 * i], amplitudes[2 * i + 1]};
        auto v = normalize ? capsim::StateVector::normalized(std::move(amps)) : capsim::StateVector(std::move(amps));
        *out = new capsim_state{std::move(v)};
    });
}

capsim_status capsim_state_haar(size_t dim, uint64_t seed, uint64_t stream, capsim_state **out) {
    return guarded([&] {
        require(out != nullptr, "NULL argument");
        capsim::RngStream rng(seed, stream);
        *out = new capsim_state{capsim::haar_state(dim, rng)};
    });
}

void capsim_state_free(capsim_state *state) { delete state; }

size_t capsim_state_dim(const capsim_state *state) { return state ? state->v.dim() : 0; }

capsim_status capsim_state_amplitudes(const capsim_state *state, double *out, size_t len) {
    return guarded([&] {
        require(state != nullptr && out != nullptr, "NULL argument");
        require(len >= 2 * state->v.dim(), "output buffer too small");
        for (size_t i = 0; i < state->v.dim(); ++i) {
            out[2 * i] = state->v[i].real();
            out[2 * i + 1] = state->v[i].imag();
        }
    });
}

capsim_status capsim_fidelity(const capsim_state *a, const capsim_state *b, double *out) {
    return guarded([&] {
        require(a != nullptr && b != nullptr && out != nullptr, "NULL argument");
        *out = capsim::fidelity(a->v, b->v);
    });
}

capsim_status capsim_cap_params_create(size_t dim, double theta_c, capsim_cap_params **out) {
    return guarded([&] {
        require(out != nullptr, "NULL argument");
        *out = new capsim_cap_params{capsim::CapParams::create(dim, theta_c)};
    });
}

capsim_status capsim_cap_params_create_unconstrained(size_t dim, double theta_c, capsim_cap_params **out) {
    return guarded([&] {
        require(out != nullptr, "NULL argument");
        *out = new capsim_cap_params{capsim::CapParams::unconstrained(dim, theta_c)};
    });
}

capsim_status capsim_cap_params_for_error(size_t dim, double delta, capsim_cap_params **out) {
    return guarded([&] {
        require(out != nullptr, "NULL argument");
        *out = new capsim_cap_params{capsim::CapParams::for_error(dim, delta)};
    });
}

void capsim_cap_params_free(capsim_cap_params *params) { delete params; }

capsim_status capsim_cap_params_info(const capsim_cap_params *params, capsim_cap_info *out) {
    return guarded([&] {
        require(params != nullptr && out != nullptr, "NULL argument");
        const auto &p = params->p;
        *out = capsim_cap_info{p.dim(), p.theta_c(), p.cos2(), p.tan2(), p.c0(), p.c1(), p.cap_fraction()};
    });
}

capsim_status capsim_cap_error_report(const capsim_cap_params *params, capsim_error_report *out) {
    return guarded([&] {
        require(params != nullptr && out != nullptr, "NULL argument");
        const auto r = capsim::cap::error_report(params->p);
        *out = capsim_error_report{r.delta1, r.delta2, r.delta};
    });
}

capsim_status capsim_cap_cost_report(const capsim_cap_params *params, capsim_cost_report *out) {
    return guarded([&] {
        require(params != nullptr && out != nullptr, "NULL argument");
        const auto r = capsim::cap::cost_report(params->p);
        *out = capsim_cost_report{r.mutual_info_bits, r.asym_cost_bits, r.one_shot_upper_bits};
    });
}

capsim_status capsim_theta_for_error(size_t dim, double delta, double *theta_c) {
    return guarded([&] {
        require(theta_c != nullptr, "NULL argument");
        *theta_c = capsim::cap::theta_for_error(dim, delta);
    });
}

capsim_status capsim_asym_cost_for_error(size_t dim, double delta, double *bits) {
    return guarded([&] {
        require(bits != nullptr, "NULL argument");
        *bits = capsim::cap::asym_cost_for_error(dim, delta);
    });
}

capsim_status capsim_ontic_cost(size_t dim, double delta, double alpha, double *bits) {
    return guarded([&] {
        require(bits != nullptr, "NULL argument");
        *bits = capsim::ontic_cost(dim, delta, alpha);
    });
}

capsim_status capsim_fc_encode(const capsim_state *psi, const capsim_cap_params *params, uint64_t shared_seed,
                               capsim_transcript **out) {
    return guarded([&] {
        require(psi != nullptr && params != nullptr && out != nullptr, "NULL argument");
        const capsim::SharedRandomness sr(shared_seed, params->p.dim());
        *out = new capsim_transcript{capsim::alice_encode(psi->v, params->p, sr)};
    });
}

capsim_status capsim_fc_decode(const capsim_transcript *transcript, const capsim_cap_params *params,
                               uint64_t shared_seed, capsim_state **x_out) {
    return guarded([&] {
        require(transcript != nullptr && params != nullptr && x_out != nullptr, "NULL argument");
        const capsim::SharedRandomness sr(shared_seed, params->p.dim());
        *x_out = new capsim_state{capsim::bob_decode(transcript->t, params->p, sr)};
    });
}

uint64_t capsim_transcript_index(const capsim_transcript *transcript) { return transcript ? transcript->t.index : 0; }

size_t capsim_transcript_bit_len(const capsim_transcript *transcript) {
    return transcript ? transcript->t.bit_len() : 0;
}

capsim_status capsim_transcript_to_wire(const capsim_transcript *transcript, uint8_t *buf, size_t cap,
                                        size_t *written) {
    return guarded([&] {
        require(transcript != nullptr && written != nullptr, "NULL argument");
        const auto bytes = transcript->t.to_wire();
        if (buf != nullptr) {
            require(cap >= bytes.size(), "output buffer too small");
            std::memcpy(buf, bytes.data(), bytes.size());
        }
        *written = bytes.size();
    });
}

capsim_status capsim_transcript_from_wire(const uint8_t *bytes, size_t len, const capsim_cap_params *params,
                                          capsim_transcript **out) {
    return guarded([&] {
        require(params != nullptr && out != nullptr && (bytes != nullptr || len == 0), "NULL argument");
        *out = new capsim_transcript{capsim::Transcript::from_wire({bytes, len}, params->p)};
    });
}

void capsim_transcript_free(capsim_transcript *transcript) { delete transcript; }

void capsim_simulate_config_init(capsim_simulate_config *cfg) {
    if (!cfg) return;
    *cfg = capsim_simulate_config{CAPSIM_MODEL_CAP, 2, 0.0, 0.0, 0, 256, 100000, 0, 0, 4, 0.99};
}

void capsim_error_sweep_config_init(capsim_error_sweep_config *cfg) {
    if (!cfg) return;
    *cfg = capsim_error_sweep_config{nullptr, 0, nullptr, 0, nullptr, 0, 100000, 0, 32, 0, 0};
}

void capsim_gap_config_init(capsim_gap_config *cfg) {
    if (!cfg) return;
    *cfg = capsim_gap_config{20, 0.01, 5.0};
}

void capsim_cost_curve_config_init(capsim_cost_curve_config *cfg) {
    if (!cfg) return;
    *cfg = capsim_cost_curve_config{2, nullptr, 0, 5.0, 0.0, 1000, 0, 0};
}

void capsim_fc_config_init(capsim_fc_config *cfg) {
    if (!cfg) return;
    *cfg = capsim_fc_config{2, 0.0, 0.0, 100000, 0, 0};
}

void capsim_jl_config_init(capsim_jl_config *cfg) {
    if (!cfg) return;
    *cfg = capsim_jl_config{256, nullptr, 0, 1000, 0, 0};
}

capsim_status capsim_run_simulate(const capsim_simulate_config *cfg, capsim_report **out) {
    return guarded([&] {
        require(cfg != nullptr && out != nullptr, "NULL argument");
        capsim::SimulateConfig sc;
        sc.model = model_from(*cfg);
        sc.trials = cfg->trials;
        sc.seed = cfg->seed;
        sc.threads = cfg->threads;
        sc.random_probes = cfg->random_probes;
        sc.confidence = cfg->confidence;
        *out = new capsim_report{capsim::simulate(sc)};
    });
}

capsim_status capsim_run_error_sweep(const capsim_error_sweep_config *cfg, capsim_report **out) {
    return guarded([&] {
        require(cfg != nullptr && out != nullptr, "NULL argument");
        capsim::ErrorSweepConfig sc;
        sc.dims = to_vector(cfg->dims, cfg->n_dims);
        sc.thetas = to_vector(cfg->thetas, cfg->n_thetas);
        sc.deltas = to_vector(cfg->deltas, cfg->n_deltas);
        sc.trials = cfg->trials;
        sc.probe_trials = cfg->probe_trials;
        sc.probes = cfg->probes;
        sc.seed = cfg->seed;
        sc.threads = cfg->threads;
        const auto rows = capsim::error_sweep(sc);
        *out = new capsim_report{capsim::error_sweep_table(sc, rows)};
    });
}

capsim_status capsim_run_gap(const capsim_gap_config *cfg, capsim_report **out) {
    return guarded([&] {
        require(cfg != nullptr && out != nullptr, "NULL argument");
        const auto rows = capsim::gap_report(cfg->qubits, cfg->delta, cfg->alpha);
        *out = new capsim_report{capsim::gap_table(cfg->qubits, cfg->delta, cfg->alpha, rows)};
    });
}

capsim_status capsim_run_cost_curve(const capsim_cost_curve_config *cfg, capsim_report **out) {
    return guarded([&] {
        require(cfg != nullptr && out != nullptr, "NULL argument");
        capsim::CostCurveConfig cc;
        cc.dim = cfg->dim;
        cc.deltas = to_vector(cfg->deltas, cfg->n_deltas);
        cc.alpha = cfg->alpha;
        cc.beta = cfg->beta;
        bool fitted = false;
        if (!(cc.beta > 0.0)) {
            require(cfg->fit_trials > 0, "fit_trials must be positive when beta is fitted");
            cc.beta = capsim::jl_scaling(256, {64}, cfg->fit_trials, cfg->seed, cfg->threads).beta;
            fitted = true;
        }
        capsim::Table t = capsim::cost_curve(cc);
        t.config["beta_fitted"] = fitted;
        if (fitted) {
            t.config["fit_trials"] = cfg->fit_trials;
            t.config["seed"] = cfg->seed;
        }
        *out = new capsim_report{std::move(t)};
    });
}

capsim_status capsim_run_fc(const capsim_fc_config *cfg, capsim_report **out) {
    return guarded([&] {
        require(cfg != nullptr && out != nullptr, "NULL argument");
        const auto p = cap_from(cfg->dim, cfg->theta_c, cfg->delta, false);
        *out = new capsim_report{capsim::fc_suite(p, cfg->trials, cfg->seed, cfg->threads)};
    });
}

capsim_status capsim_run_jl_sweep(const capsim_jl_config *cfg, capsim_report **out) {
    return guarded([&] {
        require(cfg != nullptr && out != nullptr, "NULL argument");
        capsim::JLSuiteConfig jc;
        jc.dim = cfg->dim;
        jc.subdims = to_vector(cfg->subdims, cfg->n_subdims);
        jc.trials = cfg->trials;
        jc.seed = cfg->seed;
        jc.threads = cfg->threads;
        *out = new capsim_report{capsim::jl_suite(jc)};
    });
}

void capsim_report_free(capsim_report *report) { delete report; }

size_t capsim_report_rows(const capsim_report *report) { return report ? report->table.rows.size() : 0; }

size_t capsim_report_columns(const capsim_report *report) { return report ? report->table.columns.size() : 0; }

const char *capsim_report_column_name(const capsim_report *report, size_t column) {
    if (!report || column >= report->table.columns.size()) return nullptr;
    return report->table.columns[column].c_str();
}

capsim_status capsim_report_value(const capsim_report *report, size_t row, const char *column, double *out) {
    return guarded([&] {
        require(report != nullptr && column != nullptr && out != nullptr, "NULL argument");
        require(row < report->table.rows.size(), "row out of range");
        *out = report->table.number(row, column);
    });
}

capsim_status capsim_report_render(const capsim_report *report, capsim_format format, char **out, size_t *len) {
    return guarded([&] {
        require(report != nullptr && out != nullptr, "NULL argument");
        std::string text;
        switch (format) {
            case CAPSIM_FORMAT_CSV:
                text = capsim::to_csv(report->table);
                break;
            case CAPSIM_FORMAT_JSON:
                text = capsim::to_json(report->table);
                break;
            default:
                capsim::fail(capsim::ErrorCode::InvalidArgument, "unknown output format");
        }
        char *buf = static_cast<char *>(std::malloc(text.size() + 1));
        if (!buf) throw std::bad_alloc();
        std::memcpy(buf, text.c_str(), text.size() + 1);
        *out = buf;
        if (len) *len = text.size();
    });
}

void capsim_string_free(char *s) { std::free(s); }

}  // extern "C"
