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

// Complex Hilbert-space primitives: unit vectors, Haar sampling, and the
// row-orthonormal matrices used for random subspace projections.

#ifndef CAPSIM_HILBERT_HPP
#define CAPSIM_HILBERT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "capsim/rng.hpp"

namespace capsim {

using cplx = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kOrthogonalityTolerance = 1e-10;

/// Unit vector in C^N. Immutable after construction.
class StateVector {
   public:
    /// Takes ownership of already-normalized amplitudes; throws if the norm
    /// deviates from one by more than kNormTolerance or if empty.
    explicit StateVector(std::vector<cplx> amps);

    /// Normalizes arbitrary nonzero amplitudes.
    static StateVector normalized(std::vector<cplx> amps);

    /// Computational basis vector e_k in C^dim.
    static StateVector basis(std::size_t dim, std::size_t k);

    std::size_t dim() const noexcept { return amps_.size(); }
    std::span<const cplx> amps() const noexcept { return amps_; }
    const cplx &operator[](std::size_t i) const { return amps_[i]; }

   private:
    std::vector<cplx> amps_;
};

/// N_s x N matrix with orthonormal rows (the leading block of a unitary).
class Coisometry {
   public:
    Coisometry(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const cplx> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

    /// Product of the first `rows` rows with v. Unnormalized.
    std::vector<cplx> apply_rows(std::span<const cplx> v, std::size_t rows) const;

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<cplx> entries_;
};

/// Square N x N unitary.
class UnitaryMatrix {
   public:
    explicit UnitaryMatrix(Coisometry square);

    static UnitaryMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return m_.rows(); }
    const cplx &operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
    const Coisometry &rows() const noexcept { return m_; }

    StateVector apply(const StateVector &v) const;

    /// max_ij |(U^dagger U - I)_ij|
    double unitarity_defect() const;

   private:
    Coisometry m_;
};

/// <a|b> = sum_i conj(a_i) b_i. Throws DimensionMismatch on unequal lengths.
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
cplx inner(const StateVector &a, const StateVector &b);

/// |<a|b>|^2, clamped to [0, 1].
double fidelity(const StateVector &a, const StateVector &b);

double norm(std::span<const cplx> v);

/// Haar-uniform unit vector: normalized standard complex Gaussian vector.
StateVector haar_state(std::size_t dim, RngStream &rng);

/// Haar-random N x N unitary. Gram-Schmidt on Gaussian columns leaves a
/// triangular factor with positive real diagonal, which is the phase
/// convention that makes the result exactly Haar.
UnitaryMatrix haar_unitary(std::size_t dim, RngStream &rng);

/// First `rows` rows of a Haar unitary on C^dim, without building the rest.
Coisometry haar_coisometry(std::size_t dim, std::size_t rows, RngStream &rng);

/// Haar-uniform unit vector in the orthogonal complement of psi.
StateVector orthogonal_complement_sample(const StateVector &psi, RngStream &rng);

/// sqrt(t) e^{i alpha} psi + sqrt(1 - t) w for unit w orthogonal to psi.
/// Result has |<result|psi>|^2 = t.
StateVector compose_with_overlap(const StateVector &psi, double t, double alpha, const StateVector &w);

}  // namespace capsim

#endif  // CAPSIM_HILBERT_HPP
