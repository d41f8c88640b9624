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

#include "capsim/ks_qubit.hpp"

#include <cmath>

#include "capsim/error.hpp"

namespace capsim::ks {
namespace {

void require_qubit(const StateVector &v) {
    if (v.dim() != 2) fail(ErrorCode::InvalidDimension, "Kochen-Specker model requires dimension 2");
}

}  // namespace

double overlap_from_uniform(double u) noexcept { return 0.5 + 0.5 * std::sqrt(u); }

StateVector sample_ontic(const StateVector &psi, RngStream &rng) {
    require_qubit(psi);
    const double t = overlap_from_uniform(rng.uniform());
    const double alpha = rng.phase();
    return compose_with_overlap(psi, t, alpha, orthogonal_complement_sample(psi, rng));
}

Outcome respond(const StateVector &x, const StateVector &phi) {
    require_qubit(x);
    require_qubit(phi);
    return std::norm(inner(x, phi)) > 0.5 ? Outcome::Phi : Outcome::Complement;
}

}  // namespace capsim::ks
