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

// Exact Kochen-Specker model for one qubit and a projective two-outcome
// measurement.

#ifndef CAPSIM_KS_QUBIT_HPP
#define CAPSIM_KS_QUBIT_HPP

#include "capsim/hilbert.hpp"

namespace capsim {

/// Outcome of a two-outcome measurement {|phi><phi|, 1 - |phi><phi|}.
enum class Outcome { Phi, Complement };

namespace ks {

/// Ontic state x for preparation psi. t = |<x|psi>|^2 has density
/// 8(t - 1/2) on [1/2, 1]; relative phase and complement direction are
/// uniform.
StateVector sample_ontic(const StateVector &psi, RngStream &rng);

/// Inverse CDF of the t statistic: 1/2 + sqrt(u)/2.
double overlap_from_uniform(double u) noexcept;

/// Phi iff |<x|phi>|^2 > 1/2. A tie is PhiPerp (probability zero).
Outcome respond(const StateVector &x, const StateVector &phi);

}  // namespace ks
}  // namespace capsim

#endif  // CAPSIM_KS_QUBIT_HPP
