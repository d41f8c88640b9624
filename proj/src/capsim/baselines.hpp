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

// Comparison protocols: the bounded-error strong simulation that ships a
// quantized copy of the state, and the weak protocol that first projects
// onto a random N_s-dimensional subspace.

#ifndef CAPSIM_BASELINES_HPP
#define CAPSIM_BASELINES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "capsim/hilbert.hpp"
#include "capsim/ks_qubit.hpp"

namespace capsim {

/// Finite set of unit vectors standing in for an epsilon-net.
class Codebook {
   public:
    explicit Codebook(std::vector<StateVector> codewords);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return words_.size(); }
    const StateVector &operator[](std::size_t i) const { return words_[i]; }

   private:
    std::size_t dim_;
    std::vector<StateVector> words_;
};

/// M independent Haar states.
Codebook random_codebook(std::size_t dim, std::size_t size, RngStream &rng);

/// Index of the codeword with maximal fidelity to psi; ties go to the lowest
/// index.
std::size_t quantize(const StateVector &psi, const Codebook &cb);

/// Strong-simulation cost 2 N log2(alpha / delta).
double ontic_cost(std::size_t dim, double delta, double alpha);

/// Strong simulation shot: Alice sends the index of the nearest codeword,
/// Bob answers Phi with probability equal to its fidelity with phi.
Outcome ontic_run(const StateVector &psi, const StateVector &phi, const Codebook &cb, RngStream &rng);

struct JLParams {
    std::size_t dim;
    std::size_t subdim;
    std::size_t net_size;

    void validate() const;
};

/// P U v / ||P U v||, keeping the first `subdim` coordinates.
StateVector jl_project(const StateVector &v, const UnitaryMatrix &u, std::size_t subdim);
/// Same, for a matrix that already holds only the leading rows of U.
StateVector jl_project(const StateVector &v, const Coisometry &leading_rows, std::size_t subdim);

/// Outcome probability of the projection protocol for given shared
/// randomness: |<psi_net|phi_t>|^2 with psi_net the codeword nearest psi_t.
double jl_outcome_prob(const StateVector &psi, const StateVector &phi, const Coisometry &leading_rows,
                       const Codebook &net);

/// One shot with fresh shared U and net drawn from rng.
Outcome jl_protocol_run(const StateVector &psi, const StateVector &phi, const JLParams &jl, RngStream &rng);

/// Per-run communication log2(M).
double jl_run_cost_bits(const JLParams &jl);

/// beta / delta_proj^2 * log2(alpha / delta_net).
double jl_total_cost(double delta_proj, double delta_net, double alpha, double beta);

/// State phi whose Born probability |<phi|psi>|^2 = fid, rest Haar.
StateVector state_with_fidelity(const StateVector &psi, double fid, RngStream &rng);

/// Random measurement direction: Born probability uniform on [0, 1], the
/// remaining component Haar on the complement of psi.
StateVector random_probe(const StateVector &psi, RngStream &rng);

struct JLScalingRow {
    std::size_t subdim;
    double rms_error;
    double rms_std_error;
};

struct JLScaling {
    std::size_t dim;
    uint64_t trials;
    std::vector<JLScalingRow> rows;
    /// log-log slope of rms error against N_s, over rows with N_s < N.
    double slope;
    /// 2 N_s delta_proj^2 at N_s = 64 when measured, else at the row closest to it.
    double beta;
};

/// RMS over random (psi, phi, U) of |<psi_t|phi_t>|^2 - |<psi|phi>|^2 for
/// each N_s. psi is Haar and phi = random_probe(psi).
JLScaling jl_scaling(std::size_t dim, const std::vector<std::size_t> &subdims, uint64_t trials, uint64_t seed,
                     unsigned threads = 0);

}  // namespace capsim

#endif  // CAPSIM_BASELINES_HPP
