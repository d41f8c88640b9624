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

#include "capsim/baselines.hpp"

#include <cmath>
#include <sstream>

#include "capsim/error.hpp"
#include "capsim/parallel.hpp"
#include "capsim/stats.hpp"

namespace capsim {

Codebook::Codebook(std::vector<StateVector> codewords) : words_(std::move(codewords)) {
    if (words_.empty()) fail(ErrorCode::InvalidArgument, "codebook must not be empty");
    dim_ = words_.front().dim();
    for (const auto &w : words_) {
        if (w.dim() != dim_) fail(ErrorCode::DimensionMismatch, "codewords of different dimension");
    }
}

Codebook random_codebook(std::size_t dim, std::size_t size, RngStream &rng) {
    if (size == 0) fail(ErrorCode::InvalidArgument, "codebook must not be empty");
    std::vector<StateVector> words;
    words.reserve(size);
    for (std::size_t i = 0; i < size; ++i) words.push_back(haar_state(dim, rng));
    return Codebook(std::move(words));
}

std::size_t quantize(const StateVector &psi, const Codebook &cb) {
    if (psi.dim() != cb.dim()) fail(ErrorCode::DimensionMismatch, "state and codebook dimensions differ");
    std::size_t best = 0;
    double best_fid = -1.0;
    for (std::size_t i = 0; i < cb.size(); ++i) {
        const double f = std::norm(inner(cb[i], psi));
        if (f > best_fid) {
            best_fid = f;
            best = i;
        }
    }
    return best;
}

double ontic_cost(std::size_t dim, double delta, double alpha) {
    if (dim == 0) fail(ErrorCode::InvalidDimension, "dimension must be at least 1");
    if (!(delta > 0.0 && delta < alpha)) fail(ErrorCode::InvalidArgument, "need 0 < delta < alpha");
    return 2.0 * static_cast<double>(dim) * std::log2(alpha / delta);
}

Outcome ontic_run(const StateVector &psi, const StateVector &phi, const Codebook &cb, RngStream &rng) {
    const std::size_t k = quantize(psi, cb);
    return rng.bernoulli(fidelity(cb[k], phi)) ? Outcome::Phi : Outcome::Complement;
}

void JLParams::validate() const {
    if (dim == 0) fail(ErrorCode::InvalidDimension, "dimension must be at least 1");
    if (subdim == 0 || subdim > dim) fail(ErrorCode::InvalidArgument, "subspace dimension must lie in [1, N]");
    if (net_size == 0) fail(ErrorCode::InvalidArgument, "net size must be >= 1");
}

StateVector jl_project(const StateVector &v, const Coisometry &leading_rows, std::size_t subdim) {
    if (leading_rows.cols() != v.dim()) fail(ErrorCode::DimensionMismatch, "unitary and vector dimensions differ");
    if (subdim == 0 || subdim > leading_rows.rows()) fail(ErrorCode::InvalidArgument, "subspace dimension out of range");
    std::vector<cplx> w = leading_rows.apply_rows(v.amps(), subdim);
    if (norm(w) < 1e-12) fail(ErrorCode::DegenerateProjection, "projected vector vanishes");
    return StateVector::normalized(std::move(w));
}

StateVector jl_project(const StateVector &v, const UnitaryMatrix &u, std::size_t subdim) {
    return jl_project(v, u.rows(), subdim);
}

double jl_outcome_prob(const StateVector &psi, const StateVector &phi, const Coisometry &leading_rows,
                       const Codebook &net) {
    const std::size_t ns = net.dim();
    const StateVector psi_t = jl_project(psi, leading_rows, ns);
    const StateVector phi_t = jl_project(phi, leading_rows, ns);
    return fidelity(net[quantize(psi_t, net)], phi_t);
}

Outcome jl_protocol_run(const StateVector &psi, const StateVector &phi, const JLParams &jl, RngStream &rng) {
    jl.validate();
    if (psi.dim() != jl.dim || phi.dim() != jl.dim) fail(ErrorCode::DimensionMismatch, "state dimension mismatch");
    const Coisometry rows = haar_coisometry(jl.dim, jl.subdim, rng);
    const Codebook net = random_codebook(jl.subdim, jl.net_size, rng);
    return rng.bernoulli(jl_outcome_prob(psi, phi, rows, net)) ? Outcome::Phi : Outcome::Complement;
}

double jl_run_cost_bits(const JLParams &jl) {
    jl.validate();
    return std::log2(static_cast<double>(jl.net_size));
}

double jl_total_cost(double delta_proj, double delta_net, double alpha, double beta) {
    if (!(delta_proj > 0.0)) fail(ErrorCode::InvalidArgument, "projection error must be positive");
    if (!(delta_net > 0.0 && delta_net < alpha)) fail(ErrorCode::InvalidArgument, "need 0 < net error < alpha");
    if (!(beta > 0.0)) fail(ErrorCode::InvalidArgument, "beta must be positive");
    return beta / (delta_proj * delta_proj) * std::log2(alpha / delta_net);
}

StateVector state_with_fidelity(const StateVector &psi, double fid, RngStream &rng) {
    if (!(fid >= 0.0 && fid <= 1.0)) fail(ErrorCode::InvalidArgument, "fidelity must lie in [0, 1]");
    const double alpha = rng.phase();
    return compose_with_overlap(psi, fid, alpha, orthogonal_complement_sample(psi, rng));
}

StateVector random_probe(const StateVector &psi, RngStream &rng) {
    const double fid = rng.uniform();
    return state_with_fidelity(psi, fid, rng);
}

JLScaling jl_scaling(std::size_t dim, const std::vector<std::size_t> &subdims, uint64_t trials, uint64_t seed,
                     unsigned threads) {
    if (dim < 2) fail(ErrorCode::InvalidDimension, "dimension must be at least 2");
    if (subdims.empty()) fail(ErrorCode::InvalidArgument, "need at least one subspace dimension");
    if (trials == 0) fail(ErrorCode::InvalidArgument, "trials must be >= 1");
    for (std::size_t ns : subdims) {
        if (ns == 0 || ns > dim) {
            std::ostringstream os;
            os << "subspace dimension " << ns << " outside [1, " << dim << "]";
            fail(ErrorCode::InvalidArgument, os.str());
        }
    }

    JLScaling out{dim, trials, {}, 0.0, 0.0};
    for (std::size_t ns : subdims) {
        const uint64_t ns_seed = derive_seed(seed, 0x6a6c, ns);
        std::vector<double> sq(trials);
        parallel_for(trials, threads, [&](std::size_t i) {
            RngStream rng(ns_seed, i);
            const StateVector psi = haar_state(dim, rng);
            const StateVector phi = random_probe(psi, rng);
            const Coisometry rows = haar_coisometry(dim, ns, rng);
            const double e = fidelity(jl_project(psi, rows, ns), jl_project(phi, rows, ns)) - fidelity(psi, phi);
            sq[i] = e * e;
        });
        const MeanSE m = mean_se(sq);
        const double rms = std::sqrt(m.mean);
        // delta method: se(sqrt(X)) = se(X) / (2 sqrt(X))
        out.rows.push_back({ns, rms, rms > 0.0 ? m.std_error / (2.0 * rms) : 0.0});
    }

    std::vector<double> lx, ly;
    for (const auto &r : out.rows) {
        if (r.subdim < dim && r.rms_error > 0.0) {
            lx.push_back(std::log(static_cast<double>(r.subdim)));
            ly.push_back(std::log(r.rms_error));
        }
    }
    out.slope = lx.size() >= 2 ? least_squares(lx, ly).slope : std::nan("");

    const JLScalingRow *ref = nullptr;
    for (const auto &r : out.rows) {
        if (r.subdim == dim) continue;
        const auto dist = [](std::size_t a) { return a > 64 ? a - 64 : 64 - a; };
        if (!ref || dist(r.subdim) < dist(ref->subdim)) ref = &r;
    }
    out.beta = ref ? 2.0 * static_cast<double>(ref->subdim) * ref->rms_error * ref->rms_error : std::nan("");
    return out;
}

}  // namespace capsim
