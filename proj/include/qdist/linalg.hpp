/*
 * Copyright 2026 The qdist authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QDIST_LINALG_HPP
#define QDIST_LINALG_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdist {

using Complex = std::complex<double>;

/// All domain errors carry a stable kind name (e.g. "NonHermitianInput",
/// "DimensionMismatch") so callers and the CLI can report which contract
/// was violated.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Dense square complex matrix, row-major storage.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t dim)
        : dim_(dim), entries_(dim * dim, Complex(0.0, 0.0)) {
        if (dim == 0) throw Error("InvalidDimension", "matrix dimension must be >= 1");
    }

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    const std::vector<Complex>& entries() const noexcept { return entries_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool all_finite() const;

    /// Max entrywise |M - M^dagger|.
    double hermiticity_defect() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
        m *= scalar;
        return m;
    }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Real spectrum (ascending) and orthonormal eigenvector columns of a
/// Hermitian matrix: M = V diag(lambda) V^dagger.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Off-diagonal Frobenius threshold 1e-12 * ||M||_F, at most
/// 100 sweeps. Deterministic for identical input.
///
/// Throws NonHermitianInput when ||M - M^dagger||_max exceeds
/// 1e-10 * (1 + ||M||_max), ConvergenceFailure on sweep exhaustion.
EigenDecomposition eigh(const ComplexMatrix& m);

/// Hermitian PSD square root via eigendecomposition. Eigenvalues in
/// [-1e-10, 0) are clamped to 0; anything below -1e-10 throws
/// NotPositiveSemidefinite.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

/// Trace norm of a Hermitian matrix: sum of |eigenvalue|.
double trace_norm(const ComplexMatrix& m);

/// Spectral projectors onto the strictly positive and strictly negative
/// eigenspaces of a Hermitian matrix. Eigenvalues with
/// |lambda| <= tol * ||H||_max belong to neither projector.
std::pair<ComplexMatrix, ComplexMatrix> split_projectors(const ComplexMatrix& h, double tol);

/// Kronecker product; entry ((i*m+k),(j*m+l)) = A(i,j) * B(k,l) with
/// m = dim(B).
ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hilbert-Schmidt inner product Re tr(A*B) of two Hermitian matrices.
/// Asserts |Im tr(A*B)| <= 1e-10.
double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

namespace detail {

/// Hermiticity precondition shared by eigh and friends.
void require_hermitian(const ComplexMatrix& m, const char* where);

}  // namespace detail

}  // namespace qdist

#endif  // QDIST_LINALG_HPP
