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

/* C interface to capsim: weak (cap-sampling) and strong classical
 * simulations of quantum communication followed by a two-outcome projective
 * measurement.
 *
 * All objects are opaque handles created by capsim_* functions and released
 * with the matching *_free function; *_free accepts NULL. Every fallible
 * function returns a capsim_status; on failure the out-parameters are left
 * untouched and capsim_last_error() describes the problem for the calling
 * thread. */

#ifndef CAPSIM_CAPSIM_H
#define CAPSIM_CAPSIM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(CAPSIM_BUILDING_LIBRARY)
#define CAPSIM_API __declspec(dllexport)
#else
#define CAPSIM_API __declspec(dllimport)
#endif
#else
#define CAPSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum capsim_status {
    CAPSIM_OK = 0,
    CAPSIM_ERR_INVALID_ARGUMENT = 1,
    CAPSIM_ERR_DIMENSION_MISMATCH = 2,
    CAPSIM_ERR_INVALID_DIMENSION = 3,
    CAPSIM_ERR_CONSTRAINT = 4, /* tan^2(theta_c) < N violated or error out of range */
    CAPSIM_ERR_BUDGET = 5,     /* trial or communication budget exceeded */
    CAPSIM_ERR_DECODE = 6,
    CAPSIM_ERR_DEGENERATE = 7, /* vanishing projection */
    CAPSIM_ERR_INFINITE_COST = 8,
    CAPSIM_ERR_IO = 9,
    CAPSIM_ERR_INTERNAL = 10
} capsim_status;

CAPSIM_API const char *capsim_version(void);
CAPSIM_API const char *capsim_status_name(capsim_status status);
/* Message for the last failure on this thread; empty string if none. */
CAPSIM_API const char *capsim_last_error(void);

/* ---- states ----------------------------------------------------------- */

typedef struct capsim_state capsim_state;

/* amplitudes: 2*dim doubles, interleaved real/imaginary. With normalize = 0
 * the vector must already have unit norm (within 1e-12). */
CAPSIM_API capsim_status capsim_state_from_amplitudes(size_t dim, const double *amplitudes, int normalize,
                                                      capsim_state **out);
/* Haar-random state drawn from stream (seed, stream). */
CAPSIM_API capsim_status capsim_state_haar(size_t dim, uint64_t seed, uint64_t stream, capsim_state **out);
CAPSIM_API void capsim_state_free(capsim_state *state);
CAPSIM_API size_t capsim_state_dim(const capsim_state *state);
/* Copies 2*dim doubles into out (len counts doubles). */
CAPSIM_API capsim_status capsim_state_amplitudes(const capsim_state *state, double *out, size_t len);
CAPSIM_API capsim_status capsim_fidelity(const capsim_state *a, const capsim_state *b, double *out);

/* ---- cap protocol parameters and analytic figures --------------------- */

typedef struct capsim_cap_params capsim_cap_params;

typedef struct capsim_cap_info {
    size_t dim;
    double theta_c;
    double cos2;
    double tan2;
    double c0;
    double c1;
    double cap_fraction; /* sin^{2(N-1)}(theta_c) */
} capsim_cap_info;

typedef struct capsim_error_report {
    double delta1;
    double delta2;
    double delta;
} capsim_error_report;

typedef struct capsim_cost_report {
    double mutual_info_bits;
    double asym_cost_bits;
    double one_shot_upper_bits;
} capsim_cost_report;

/* Requires tan^2(theta_c) < dim. */
CAPSIM_API capsim_status capsim_cap_params_create(size_t dim, double theta_c, capsim_cap_params **out);
/* Only 0 < theta_c <= pi/2; usable for encoding and cost figures. */
CAPSIM_API capsim_status capsim_cap_params_create_unconstrained(size_t dim, double theta_c, capsim_cap_params **out);
CAPSIM_API capsim_status capsim_cap_params_for_error(size_t dim, double delta, capsim_cap_params **out);
CAPSIM_API void capsim_cap_params_free(capsim_cap_params *params);
CAPSIM_API capsim_status capsim_cap_params_info(const capsim_cap_params *params, capsim_cap_info *out);
CAPSIM_API capsim_status capsim_cap_error_report(const capsim_cap_params *params, capsim_error_report *out);
CAPSIM_API capsim_status capsim_cap_cost_report(const capsim_cap_params *params, capsim_cost_report *out);
CAPSIM_API capsim_status capsim_theta_for_error(size_t dim, double delta, double *theta_c);
CAPSIM_API capsim_status capsim_asym_cost_for_error(size_t dim, double delta, double *bits);
CAPSIM_API capsim_status capsim_ontic_cost(size_t dim, double delta, double alpha, double *bits);

/* ---- finite-communication channel ------------------------------------- */

typedef struct capsim_transcript capsim_transcript;

/* Alice: index of the first shared state (stream shared_seed) inside the
 * cap around psi, Golomb coded. */
CAPSIM_API capsim_status capsim_fc_encode(const capsim_state *psi, const capsim_cap_params *params,
                                          uint64_t shared_seed, capsim_transcript **out);
/* Bob: replays the shared stream at the transmitted index. */
CAPSIM_API capsim_status capsim_fc_decode(const capsim_transcript *transcript, const capsim_cap_params *params,
                                          uint64_t shared_seed, capsim_state **x_out);
CAPSIM_API uint64_t capsim_transcript_index(const capsim_transcript *transcript);
CAPSIM_API size_t capsim_transcript_bit_len(const capsim_transcript *transcript);
/* Wire bytes: header byte with the pad length, then the bits MSB-first.
 * With buf == NULL only *written (the required size) is set. */
CAPSIM_API capsim_status capsim_transcript_to_wire(const capsim_transcript *transcript, uint8_t *buf, size_t cap,
                                                   size_t *written);
CAPSIM_API capsim_status capsim_transcript_from_wire(const uint8_t *bytes, size_t len,
                                                     const capsim_cap_params *params, capsim_transcript **out);
CAPSIM_API void capsim_transcript_free(capsim_transcript *transcript);

/* ---- experiments ------------------------------------------------------ */

typedef enum capsim_model {
    CAPSIM_MODEL_KS_QUBIT = 0,
    CAPSIM_MODEL_CAP = 1,
    CAPSIM_MODEL_CAP_FC = 2,
    CAPSIM_MODEL_JL = 3,
    CAPSIM_MODEL_ONTIC = 4
} capsim_model;

typedef enum capsim_format { CAPSIM_FORMAT_CSV = 0, CAPSIM_FORMAT_JSON = 1 } capsim_format;

typedef struct capsim_report capsim_report;

/* For cap models exactly one of theta_c and delta must be positive; 0 means
 * unset. threads = 0 uses every core and never changes the output. */
typedef struct capsim_simulate_config {
    capsim_model model;
    size_t dim;
    double theta_c;
    double delta;
    size_t subdim;   /* jl */
    size_t net_size; /* jl, ontic */
    uint64_t trials;
    uint64_t seed;
    unsigned threads;
    size_t random_probes;
    double confidence;
} capsim_simulate_config;

typedef struct capsim_error_sweep_config {
    const size_t *dims;
    size_t n_dims;
    const double *thetas; /* either thetas ... */
    size_t n_thetas;
    const double *deltas; /* ... or deltas, converted per dimension */
    size_t n_deltas;
    uint64_t trials;
    uint64_t probe_trials; /* 0: trials / 10 */
    size_t probes;
    uint64_t seed;
    unsigned threads;
} capsim_error_sweep_config;

typedef struct capsim_gap_config {
    int qubits;
    double delta;
    double alpha;
} capsim_gap_config;

typedef struct capsim_cost_curve_config {
    size_t dim;
    const double *deltas; /* NULL: default grid */
    size_t n_deltas;
    double alpha;
    double beta;          /* <= 0: fitted from a projection run at N = 256, N_s = 64 */
    uint64_t fit_trials;
    uint64_t seed;
    unsigned threads;
} capsim_cost_curve_config;

typedef struct capsim_fc_config {
    size_t dim;
    double theta_c;
    double delta;
    uint64_t trials;
    uint64_t seed;
    unsigned threads;
} capsim_fc_config;

typedef struct capsim_jl_config {
    size_t dim;
    const size_t *subdims; /* NULL: 8, 16, ..., 128 capped at dim */
    size_t n_subdims;
    uint64_t trials;
    uint64_t seed;
    unsigned threads;
} capsim_jl_config;

/* Fill configs with defaults (trials 1e5, confidence 0.99, alpha 5, ...). */
CAPSIM_API void capsim_simulate_config_init(capsim_simulate_config *cfg);
CAPSIM_API void capsim_error_sweep_config_init(capsim_error_sweep_config *cfg);
CAPSIM_API void capsim_gap_config_init(capsim_gap_config *cfg);
CAPSIM_API void capsim_cost_curve_config_init(capsim_cost_curve_config *cfg);
CAPSIM_API void capsim_fc_config_init(capsim_fc_config *cfg);
CAPSIM_API void capsim_jl_config_init(capsim_jl_config *cfg);

CAPSIM_API capsim_status capsim_run_simulate(const capsim_simulate_config *cfg, capsim_report **out);
CAPSIM_API capsim_status capsim_run_error_sweep(const capsim_error_sweep_config *cfg, capsim_report **out);
CAPSIM_API capsim_status capsim_run_gap(const capsim_gap_config *cfg, capsim_report **out);
CAPSIM_API capsim_status capsim_run_cost_curve(const capsim_cost_curve_config *cfg, capsim_report **out);
CAPSIM_API capsim_status capsim_run_fc(const capsim_fc_config *cfg, capsim_report **out);
CAPSIM_API capsim_status capsim_run_jl_sweep(const capsim_jl_config *cfg, capsim_report **out);

CAPSIM_API void capsim_report_free(capsim_report *report);
CAPSIM_API size_t capsim_report_rows(const capsim_report *report);
CAPSIM_API size_t capsim_report_columns(const capsim_report *report);
/* NULL when out of range. The pointer lives as long as the report. */
CAPSIM_API const char *capsim_report_column_name(const capsim_report *report, size_t column);
/* Numeric cell; NaN for text cells. Unknown column names fail. */
CAPSIM_API capsim_status capsim_report_value(const capsim_report *report, size_t row, const char *column,
                                             double *out);
/* Renders CSV or JSON. *out is NUL terminated and must be released with
 * capsim_string_free. */
CAPSIM_API capsim_status capsim_report_render(const capsim_report *report, capsim_format format, char **out,
                                              size_t *len);
CAPSIM_API void capsim_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* CAPSIM_CAPSIM_H */
