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

#include "qdist/measures.hpp"

#include <cmath>

namespace qdist {

namespace {

constexpr double kProjectorTol = 1e-12;

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim())
        throw Error("DimensionMismatch", "states have dims " + std::to_string(a.dim()) +
                                             " and " + std::to_string(b.dim()));
}

double fidelity_from(const DensityMatrix& a, const DensityMatrix& b) {
    const ComplexMatrix sqrt_a = matrix_sqrt_psd(a.matrix());
    ComplexMatrix prod = sqrt_a * b.matrix() * sqrt_a;
    // Symmetrize away the floating-point skew before the eigensolve.
    prod += prod.adjoint();
    prod *= Complex(0.5, 0.0);
    const EigenDecomposition ed = eigh(prod);
    // Same relative floor as matrix_sqrt_psd: true zeros of the product
    // spectrum carry eigensolver noise whose sqrt would pollute F.
    const double floor = 1e-13 * std::max(0.0, ed.eigenvalues.back());
    double sum_roots = 0.0;
    for (double lambda : ed.eigenvalues)
        if (lambda > floor) sum_roots += std::sqrt(lambda);
    return sum_roots * sum_roots;
}

}  // namespace

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    require_same_dim(a, b);
    return 0.5 * trace_norm(a.matrix() - b.matrix());
}

double trace_distance_projector_form(const DensityMatrix& a, const DensityMatrix& b) {
    require_same_dim(a, b);
    const auto [plus, minus] = split_projectors(a.matrix() - b.matrix(), kProjectorTol);
    // 1 - tr(P+ b) - tr(P- a), corrected for the kernel of a - b: the
    // identity P+ + P- = 1 fails when the difference is rank-deficient, so
    // the kernel weight tr(P0 (a+b))/2 is subtracted as well (it is the
    // same in a and b up to the projector cutoff).
    const std::size_t n = a.dim();
    ComplexMatrix kernel = ComplexMatrix::identity(n);
    kernel -= plus;
    kernel -= minus;
    const double kernel_weight =
        0.5 * (hs_inner(kernel, a.matrix()) + hs_inner(kernel, b.matrix()));
    return 1.0 - hs_inner(plus, b.matrix()) - hs_inner(minus, a.matrix()) - kernel_weight;
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
    require_same_dim(a, b);
    return fidelity_from(a, b);
}

double sqrt_fidelity(const DensityMatrix& a, const DensityMatrix& b) {
    return std::sqrt(fidelity(a, b));
}

double superfidelity(const DensityMatrix& a, const DensityMatrix& b) {
    require_same_dim(a, b);
    const double overlap = hs_inner(a.matrix(), b.matrix());
    // 1 - purity carries O(eps) rounding noise that sqrt amplifies to
    // ~1e-8 on pure states; treat values below the floor as exact zeros.
    const auto mixedness = [](const DensityMatrix& s) {
        const double m = 1.0 - purity(s);
        return m > 1e-13 ? std::sqrt(m) : 0.0;
    };
    return overlap + mixedness(a) * mixedness(b);
}

double bures_distance(const DensityMatrix& a, const DensityMatrix& b) {
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * sqrt_fidelity(a, b)));
}

double d_b_prime(const DensityMatrix& a, const DensityMatrix& b) {
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(std::max(0.0, superfidelity(a, b)))));
}

double d_g(const DensityMatrix& a, const DensityMatrix& b) {
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * superfidelity(a, b)));
}

double error_probability(const DensityMatrix& a, const DensityMatrix& b) {
    return 0.5 * (1.0 - trace_distance(a, b));
}

MeasureSet measure_all(const DensityMatrix& a, const DensityMatrix& b) {
    require_same_dim(a, b);
    MeasureSet out;
    out.d_tr = trace_distance(a, b);
    out.fidelity = fidelity(a, b);
    out.sqrt_fidelity = std::sqrt(out.fidelity);
    out.superfidelity = superfidelity(a, b);
    out.bures = std::sqrt(std::max(0.0, 2.0 - 2.0 * out.sqrt_fidelity));
    out.d_g = std::sqrt(std::max(0.0, 2.0 - 2.0 * out.superfidelity));
    out.d_b_prime =
        std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(std::max(0.0, out.superfidelity))));
    out.p_error = 0.5 * (1.0 - out.d_tr);
    return out;
}

}  // namespace qdist
