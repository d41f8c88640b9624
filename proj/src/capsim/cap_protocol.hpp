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

// Cap-sampling weak simulation of an N-dimensional channel followed by a
// two-outcome projective measurement, together with its closed-form error
// and communication-cost figures.
//
// Alice draws x uniformly from the spherical cap |<x|psi>|^2 >= cos^2(theta_c).
// Bob answers Phi with probability
//
//   P(Phi|x) = clip( |<x|phi>|^2 / cos^2(theta_c) - tan^2(theta_c) / N ).
//
// Without the clip, the average over the cap equals |<phi|psi>|^2 exactly.
// The clip costs at most
//
//   Delta = (1/N) (1 - 1/N)^N tan^2(theta_c),
//
// attained at psi = phi, provided tan^2(theta_c) < N.

#ifndef CAPSIM_CAP_PROTOCOL_HPP
#define CAPSIM_CAP_PROTOCOL_HPP

#include <cstddef>

#include "capsim/hilbert.hpp"
#include "capsim/ks_qubit.hpp"

namespace capsim {

class CapParams {
   public:
    /// Validated parameters: dim >= 2, 0 < theta_c <= pi/2, tan^2 < dim.
    static CapParams create(std::size_t dim, double theta_c);

    /// Skips the tan^2 < dim check. Enough for sampling and cost figures
    /// (e.g. theta_c = pi/2, where the cap is the whole sphere) but not for
    /// the response rule or the error report.
    static CapParams unconstrained(std::size_t dim, double theta_c);

    /// theta_c that yields worst-case error delta at this dimension.
    static CapParams for_error(std::size_t dim, double delta);

    std::size_t dim() const noexcept { return dim_; }
    double theta_c() const noexcept { return theta_c_; }
    double cos2() const noexcept { return cos2_; }
    double sin2() const noexcept { return sin2_; }
    double tan2() const noexcept { return tan2_; }
    /// Response offset -tan^2/N.
    double c0() const noexcept { return c0_; }
    /// Response slope 1/cos^2.
    double c1() const noexcept { return c1_; }
    /// log2 of the cap density constant R0 = 1/sin^{2(N-1)}(theta_c).
    /// Informational only.
    double log2_density_const() const noexcept { return log2_density_; }
    bool in_error_regime() const noexcept { return tan2_ < static_cast<double>(dim_); }

    /// Probability that a Haar state lands in the cap: sin^{2(N-1)}(theta_c).
    double cap_fraction() const noexcept;

   private:
    CapParams(std::size_t dim, double theta_c);

    std::size_t dim_;
    double theta_c_;
    double cos2_;
    double sin2_;
    double tan2_;
    double c0_;
    double c1_;
    double log2_density_;
};

struct ErrorReport {
    double delta1;  // psi = phi
    double delta2;  // psi orthogonal to phi
    double delta;   // worst case, equals delta1
};

struct CostReport {
    double mutual_info_bits;
    double asym_cost_bits;
    double one_shot_upper_bits;
};

inline constexpr double kLog2E = 1.4426950408889634;

/// (1 - 1/N)^N, evaluated as exp(N log1p(-1/N)).
double decay_factor(std::size_t dim);

namespace cap {

/// Uniform sample from the cap around psi, by the exact conditional inverse
/// CDF t = 1 - sin^2(theta_c) u^{1/(N-1)}.
StateVector sample(const StateVector &psi, const CapParams &p, RngStream &rng);

/// Overlap statistic for a given uniform u in (0, 1].
double overlap_from_uniform(double u, const CapParams &p) noexcept;

/// Unclipped c1 |<x|phi>|^2 + c0; can leave [0, 1].
double exact_quasi_prob(const StateVector &x, const StateVector &phi, const CapParams &p);
double exact_quasi_prob(double fid, const CapParams &p) noexcept;

/// Clipped response probability, always in [0, 1].
double response_prob(const StateVector &x, const StateVector &phi, const CapParams &p);
double response_prob(double fid, const CapParams &p) noexcept;

Outcome respond(const StateVector &x, const StateVector &phi, const CapParams &p, RngStream &rng);

ErrorReport error_report(const CapParams &p);

/// Throws InfiniteCost at theta_c = 0.
CostReport cost_report(const CapParams &p);

/// -2 (N - 1) log2 sin(theta_c).
double mutual_info_bits(std::size_t dim, double theta_c);

/// Largest admissible error at this dimension, (1 - 1/N)^N (exclusive).
double max_admissible_error(std::size_t dim);

/// arctan sqrt(N delta / (1 - 1/N)^N).
double theta_for_error(std::size_t dim, double delta);

/// (N - 1) log2[1 + (1 - 1/N)^N / (N delta)].
double asym_cost_for_error(std::size_t dim, double delta);

}  // namespace cap
}  // namespace capsim

#endif  // CAPSIM_CAP_PROTOCOL_HPP
