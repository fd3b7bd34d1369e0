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

#include "qdist/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qdist {

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const Complex& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

double ComplexMatrix::hermiticity_defect() const {
    double d = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rhs.dim_ != dim_) throw Error("DimensionMismatch", "matrix addition requires equal dims");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rhs.dim_ != dim_) throw Error("DimensionMismatch", "matrix subtraction requires equal dims");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (Complex& z : entries_) z *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.dim_ != rhs.dim_)
        throw Error("DimensionMismatch", "matrix product requires equal dims");
    const std::size_t n = lhs.dim_;
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex lik = lhs(i, k);
            if (lik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += lik * rhs(k, j);
        }
    }
    return out;
}

namespace detail {

void require_hermitian(const ComplexMatrix& m, const char* where) {
    const double tol = 1e-10 * (1.0 + m.max_abs());
    if (m.hermiticity_defect() > tol)
        throw Error("NonHermitianInput", std::string(where) + ": input is not Hermitian");
}

}  // namespace detail

namespace {

double off_diagonal_frobenius(const ComplexMatrix& a) {
    const std::size_t n = a.dim();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenDecomposition eigh(const ComplexMatrix& m) {
    detail::require_hermitian(m, "eigh");
    const std::size_t n = m.dim();

    // Work on the Hermitian part; the defect is below tolerance.
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = Complex(m(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double fro = a.frobenius_norm();
    // Stop near machine precision: sqrt-type post-processing amplifies an
    // eigenvalue error of size thresh to thresh / (2 sqrt(lambda)), so a
    // looser stop leaks visible error through matrix_sqrt_psd.
    const double thresh = 1e-15 * fro;
    const double skip = thresh / (2.0 * static_cast<double>(n) * static_cast<double>(n));

    bool converged = (n == 1) || off_diagonal_frobenius(a) <= thresh;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double ab = std::abs(apq);
                if (ab <= skip) continue;

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double beta = std::arg(apq);
                const double theta = 0.5 * std::atan2(2.0 * ab, app - aqq);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                const Complex eib(std::cos(beta), std::sin(beta));
                const Complex emib = std::conj(eib);

                // A <- U^dagger A U with the plane rotation on (p, q).
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp + s * emib * akq;
                    a(k, q) = -s * eib * akp + c * akq;
                    a(p, k) = std::conj(a(k, p));
                    a(q, k) = std::conj(a(k, q));
                }
                a(p, p) = Complex(c * c * app + s * s * aqq + 2.0 * c * s * ab, 0.0);
                a(q, q) = Complex(s * s * app + c * c * aqq - 2.0 * c * s * ab, 0.0);
                a(p, q) = 0.0;
                a(q, p) = 0.0;

                // V <- V U
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp + s * emib * vkq;
                    v(k, q) = -s * eib * vkp + c * vkq;
                }
            }
        }
        converged = off_diagonal_frobenius(a) <= thresh;
    }
    if (!converged)
        throw Error("ConvergenceFailure", "Jacobi sweep limit (100) exceeded in eigh");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t col = 0; col < n; ++col) {
        out.eigenvalues[col] = a(order[col], order[col]).real();
        for (std::size_t row = 0; row < n; ++row)
            out.eigenvectors(row, col) = v(row, order[col]);
    }
    return out;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
    const EigenDecomposition ed = eigh(m);
    const std::size_t n = m.dim();
    // Eigenvalues below the relative floor are treated as exact zeros;
    // sqrt would otherwise amplify eigensolver noise on rank-deficient
    // input (sqrt(1e-17) ~ 3e-9, visible at the 1e-9 tolerances).
    const double floor = 1e-13 * std::max(0.0, ed.eigenvalues.back());
    std::vector<double> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        double lambda = ed.eigenvalues[i];
        if (lambda < -1e-10)
            throw Error("NotPositiveSemidefinite",
                        "eigenvalue " + std::to_string(lambda) + " below -1e-10");
        if (lambda < floor) lambda = 0.0;
        roots[i] = std::sqrt(lambda);
    }
    // V diag(sqrt(lambda)) V^dagger
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                s += ed.eigenvectors(i, k) * roots[k] * std::conj(ed.eigenvectors(j, k));
            out(i, j) = s;
        }
    }
    return out;
}

double trace_norm(const ComplexMatrix& m) {
    const EigenDecomposition ed = eigh(m);
    double s = 0.0;
    for (double lambda : ed.eigenvalues) s += std::fabs(lambda);
    return s;
}

std::pair<ComplexMatrix, ComplexMatrix> split_projectors(const ComplexMatrix& h, double tol) {
    const EigenDecomposition ed = eigh(h);
    const std::size_t n = h.dim();
    const double cut = tol * h.max_abs();
    ComplexMatrix plus(n);
    ComplexMatrix minus(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = ed.eigenvalues[k];
        ComplexMatrix* target = nullptr;
        if (lambda > cut)
            target = &plus;
        else if (lambda < -cut)
            target = &minus;
        else
            continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                (*target)(i, j) += ed.eigenvectors(i, k) * std::conj(ed.eigenvectors(j, k));
    }
    return {plus, minus};
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    out(i * nb + k, j * nb + l) = aij * b(k, l);
        }
    return out;
}

double hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim())
        throw Error("DimensionMismatch", "hs_inner requires equal dims");
    detail::require_hermitian(a, "hs_inner");
    detail::require_hermitian(b, "hs_inner");
    // tr(A B) = sum_ij A(i,j) B(j,i)
    Complex t = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t += a(i, j) * b(j, i);
    if (std::fabs(t.imag()) > 1e-10)
        throw Error("NonHermitianInput", "hs_inner: imaginary trace residue exceeds 1e-10");
    return t.real();
}

}  // namespace qdist
