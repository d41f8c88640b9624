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

#include "capsim/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "capsim/error.hpp"

namespace capsim {
namespace {

// Written out on real/imag parts so the hot loops avoid the C99 Annex G
// complex multiply.
cplx cdot(const cplx *a, const cplx *b, std::size_t n) noexcept {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = a[i].real(), ai = a[i].imag();
        const double br = b[i].real(), bi = b[i].imag();
        re += ar * br + ai * bi;
        im += ar * bi - ai * br;
    }
    return {re, im};
}

// y -= c * x
void caxpy_sub(cplx c, const cplx *x, cplx *y, std::size_t n) noexcept {
    const double cr = c.real(), ci = c.imag();
    for (std::size_t i = 0; i < n; ++i) {
        const double xr = x[i].real(), xi = x[i].imag();
        y[i] = {y[i].real() - (cr * xr - ci * xi), y[i].imag() - (cr * xi + ci * xr)};
    }
}

double sqnorm(const cplx *v, std::size_t n) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i].real() * v[i].real() + v[i].imag() * v[i].imag();
    return s;
}

void scale(cplx *v, std::size_t n, double f) noexcept {
    for (std::size_t i = 0; i < n; ++i) v[i] *= f;
}

void require_dim(std::size_t dim) {
    if (dim == 0) fail(ErrorCode::InvalidDimension, "dimension must be at least 1");
}

std::vector<cplx> gaussian_vector(std::size_t dim, RngStream &rng) {
    std::vector<cplx> z(dim);
    for (auto &c : z) c = rng.complex_normal();
    return z;
}

}  // namespace

StateVector::StateVector(std::vector<cplx> amps) : amps_(std::move(amps)) {
    if (amps_.empty()) fail(ErrorCode::InvalidDimension, "state vector must have dimension >= 1");
    const double n = std::sqrt(sqnorm(amps_.data(), amps_.size()));
    if (!(std::abs(n - 1.0) <= kNormTolerance)) {
        fail(ErrorCode::InvalidArgument, "state vector is not normalized (norm " + std::to_string(n) + ")");
    }
}

StateVector StateVector::normalized(std::vector<cplx> amps) {
    if (amps.empty()) fail(ErrorCode::InvalidDimension, "state vector must have dimension >= 1");
    const double n = std::sqrt(sqnorm(amps.data(), amps.size()));
    if (!(n > 0.0) || !std::isfinite(n)) fail(ErrorCode::InvalidArgument, "cannot normalize a zero or non-finite vector");
    scale(amps.data(), amps.size(), 1.0 / n);
    return StateVector(std::move(amps));
}

StateVector StateVector::basis(std::size_t dim, std::size_t k) {
    require_dim(dim);
    if (k >= dim) fail(ErrorCode::InvalidArgument, "basis index out of range");
    std::vector<cplx> amps(dim);
    amps[k] = 1.0;
    return StateVector(std::move(amps));
}

Coisometry::Coisometry(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows == 0 || cols == 0 || rows > cols) fail(ErrorCode::InvalidDimension, "coisometry needs 1 <= rows <= cols");
    if (entries_.size() != rows * cols) fail(ErrorCode::DimensionMismatch, "coisometry entry count mismatch");
}

std::vector<cplx> Coisometry::apply_rows(std::span<const cplx> v, std::size_t rows) const {
    if (v.size() != cols_) fail(ErrorCode::DimensionMismatch, "vector length does not match matrix columns");
    if (rows > rows_) fail(ErrorCode::InvalidArgument, "requested more rows than available");
    std::vector<cplx> out(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        // row . v (no conjugation)
        const cplx *m = entries_.data() + r * cols_;
        double re = 0.0, im = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) {
            re += m[c].real() * v[c].real() - m[c].imag() * v[c].imag();
            im += m[c].real() * v[c].imag() + m[c].imag() * v[c].real();
        }
        out[r] = {re, im};
    }
    return out;
}

UnitaryMatrix::UnitaryMatrix(Coisometry square) : m_(std::move(square)) {
    if (m_.rows() != m_.cols()) fail(ErrorCode::DimensionMismatch, "unitary matrix must be square");
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dim) {
    require_dim(dim);
    std::vector<cplx> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
    return UnitaryMatrix(Coisometry(dim, dim, std::move(e)));
}

StateVector UnitaryMatrix::apply(const StateVector &v) const {
    return StateVector::normalized(m_.apply_rows(v.amps(), dim()));
}

double UnitaryMatrix::unitarity_defect() const {
    const std::size_t n = dim();
    double worst = 0.0;
    // (U^dagger U)_ij = sum_k conj(U_ki) U_kj
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += std::conj(m_(k, i)) * m_(k, j);
            if (i == j) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    }
    return worst;
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) {
        fail(ErrorCode::DimensionMismatch,
             "incompatible vectors: dimensions " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    return cdot(a.data(), b.data(), a.size());
}

cplx inner(const StateVector &a, const StateVector &b) { return inner(a.amps(), b.amps()); }

double fidelity(const StateVector &a, const StateVector &b) {
    return std::clamp(std::norm(inner(a, b)), 0.0, 1.0);
}

double norm(std::span<const cplx> v) { return std::sqrt(sqnorm(v.data(), v.size())); }

StateVector haar_state(std::size_t dim, RngStream &rng) {
    require_dim(dim);
    return StateVector::normalized(gaussian_vector(dim, rng));
}

Coisometry haar_coisometry(std::size_t dim, std::size_t rows, RngStream &rng) {
    require_dim(dim);
    if (rows == 0 || rows > dim) fail(ErrorCode::InvalidArgument, "row count must lie in [1, dim]");
    std::vector<cplx> e(rows * dim);
    for (auto &c : e) c = rng.complex_normal();
    // Modified Gram-Schmidt with one reorthogonalization sweep per row.
    for (std::size_t k = 0; k < rows; ++k) {
        cplx *rk = e.data() + k * dim;
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < k; ++j) {
                const cplx *rj = e.data() + j * dim;
                caxpy_sub(cdot(rj, rk, dim), rj, rk, dim);
            }
        }
        scale(rk, dim, 1.0 / std::sqrt(sqnorm(rk, dim)));
    }
    return Coisometry(rows, dim, std::move(e));
}

UnitaryMatrix haar_unitary(std::size_t dim, RngStream &rng) { return UnitaryMatrix(haar_coisometry(dim, dim, rng)); }

StateVector orthogonal_complement_sample(const StateVector &psi, RngStream &rng) {
    const std::size_t n = psi.dim();
    if (n < 2) fail(ErrorCode::InvalidDimension, "a one-dimensional space has no orthogonal complement");
    const cplx *p = psi.amps().data();
    for (;;) {
        std::vector<cplx> z = gaussian_vector(n, rng);
        const double before = sqnorm(z.data(), n);
        for (int pass = 0; pass < 2; ++pass) caxpy_sub(cdot(p, z.data(), n), p, z.data(), n);
        // A complement component this small relative to z is a measure-zero
        // event in exact arithmetic; redraw rather than amplify rounding.
        if (sqnorm(z.data(), n) > 1e-20 * before) return StateVector::normalized(std::move(z));
    }
}

StateVector compose_with_overlap(const StateVector &psi, double t, double alpha, const StateVector &w) {
    if (psi.dim() != w.dim()) fail(ErrorCode::DimensionMismatch, "psi and w dimensions differ");
    t = std::clamp(t, 0.0, 1.0);
    const cplx a = std::polar(std::sqrt(t), alpha);
    const double b = std::sqrt(1.0 - t);
    std::vector<cplx> x(psi.dim());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = a * psi[i] + b * w[i];
    return StateVector::normalized(std::move(x));
}

}  // namespace capsim
