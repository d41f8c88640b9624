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

#include "capsim/cap_protocol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "capsim/error.hpp"

namespace capsim {
namespace {

void require_dims(const StateVector &a, const StateVector &b, const CapParams &p) {
    if (a.dim() != p.dim() || b.dim() != p.dim()) {
        fail(ErrorCode::DimensionMismatch, "state dimension does not match cap parameters");
    }
}

void require_regime(const CapParams &p) {
    if (!p.in_error_regime()) {
        std::ostringstream os;
        os << "tan^2(theta_c) = " << p.tan2() << " must be below the dimension " << p.dim();
        fail(ErrorCode::ConstraintViolation, os.str());
    }
}

}  // namespace

CapParams::CapParams(std::size_t dim, double theta_c) : dim_(dim), theta_c_(theta_c) {
    if (dim < 2) fail(ErrorCode::InvalidDimension, "cap protocol needs dimension >= 2");
    if (!(theta_c > 0.0 && theta_c <= M_PI / 2)) {
        fail(ErrorCode::InvalidArgument, "theta_c must lie in (0, pi/2]");
    }
    const double s = std::sin(theta_c);
    const double c = std::cos(theta_c);
    sin2_ = s * s;
    cos2_ = c * c;
    tan2_ = sin2_ / cos2_;
    c1_ = 1.0 / cos2_;
    c0_ = -tan2_ / static_cast<double>(dim);
    log2_density_ = cap::mutual_info_bits(dim, theta_c);
}

CapParams CapParams::unconstrained(std::size_t dim, double theta_c) { return CapParams(dim, theta_c); }

CapParams CapParams::create(std::size_t dim, double theta_c) {
    CapParams p(dim, theta_c);
    require_regime(p);
    return p;
}

CapParams CapParams::for_error(std::size_t dim, double delta) { return create(dim, cap::theta_for_error(dim, delta)); }

double CapParams::cap_fraction() const noexcept {
    return std::exp(static_cast<double>(dim_ - 1) * std::log(sin2_));
}

double decay_factor(std::size_t dim) {
    const double n = static_cast<double>(dim);
    return std::exp(n * std::log1p(-1.0 / n));
}

namespace cap {

double overlap_from_uniform(double u, const CapParams &p) noexcept {
    const double s = std::exp(std::log(u) / static_cast<double>(p.dim() - 1));
    return 1.0 - p.sin2() * s;
}

StateVector sample(const StateVector &psi, const CapParams &p, RngStream &rng) {
    if (psi.dim() != p.dim()) fail(ErrorCode::DimensionMismatch, "state dimension does not match cap parameters");
    const double t = overlap_from_uniform(rng.uniform_pos(), p);
    const double alpha = rng.phase();
    return compose_with_overlap(psi, t, alpha, orthogonal_complement_sample(psi, rng));
}

double exact_quasi_prob(double fid, const CapParams &p) noexcept { return p.c1() * fid + p.c0(); }

double exact_quasi_prob(const StateVector &x, const StateVector &phi, const CapParams &p) {
    require_dims(x, phi, p);
    return exact_quasi_prob(std::norm(inner(x, phi)), p);
}

double response_prob(double fid, const CapParams &p) noexcept {
    const double floor = p.sin2() / static_cast<double>(p.dim());
    if (fid > p.cos2() + floor) return 1.0;
    if (fid < floor) return 0.0;
    return std::clamp(exact_quasi_prob(fid, p), 0.0, 1.0);
}

double response_prob(const StateVector &x, const StateVector &phi, const CapParams &p) {
    require_dims(x, phi, p);
    require_regime(p);
    return response_prob(std::norm(inner(x, phi)), p);
}

Outcome respond(const StateVector &x, const StateVector &phi, const CapParams &p, RngStream &rng) {
    return rng.bernoulli(response_prob(x, phi, p)) ? Outcome::Phi : Outcome::Complement;
}

ErrorReport error_report(const CapParams &p) {
    require_regime(p);
    const double n = static_cast<double>(p.dim());
    const double delta1 = decay_factor(p.dim()) * p.tan2() / n;
    double delta2 = delta1;
    if (p.tan2() > 1.0 / (1.0 - 1.0 / n)) {
        const double base = 1.0 - 1.0 / n - 1.0 / p.tan2();
        delta2 = delta1 - std::exp(n * std::log(base)) * p.tan2() / n;
    }
    return {delta1, delta2, delta1};
}

double mutual_info_bits(std::size_t dim, double theta_c) {
    if (dim < 1) fail(ErrorCode::InvalidDimension, "dimension must be at least 1");
    if (theta_c == 0.0) fail(ErrorCode::InfiniteCost, "theta_c = 0 sends the state itself: infinite cost");
    if (!(theta_c > 0.0 && theta_c <= M_PI / 2)) fail(ErrorCode::InvalidArgument, "theta_c must lie in (0, pi/2]");
    const double s = std::sin(theta_c);
    return std::max(0.0, -static_cast<double>(dim - 1) * std::log2(s * s));
}

CostReport cost_report(const CapParams &p) {
    const double info = mutual_info_bits(p.dim(), p.theta_c());
    return {info, info, info + kLog2E};
}

double max_admissible_error(std::size_t dim) {
    if (dim < 2) fail(ErrorCode::InvalidDimension, "cap protocol needs dimension >= 2");
    return decay_factor(dim);
}

double theta_for_error(std::size_t dim, double delta) {
    const double hi = max_admissible_error(dim);
    if (!(delta > 0.0 && delta < hi)) {
        std::ostringstream os;
        os << "error " << delta << " outside the admissible range (0, " << hi << ") for dimension " << dim;
        fail(ErrorCode::ConstraintViolation, os.str());
    }
    const double n = static_cast<double>(dim);
    return std::atan(std::sqrt(n * delta / hi));
}

double asym_cost_for_error(std::size_t dim, double delta) {
    const double hi = max_admissible_error(dim);
    if (!(delta > 0.0 && delta < hi)) {
        std::ostringstream os;
        os << "error " << delta << " outside the admissible range (0, " << hi << ") for dimension " << dim;
        fail(ErrorCode::ConstraintViolation, os.str());
    }
    const double n = static_cast<double>(dim);
    return (n - 1.0) * std::log1p(hi / (n * delta)) * kLog2E;
}

}  // namespace cap
}  // namespace capsim
