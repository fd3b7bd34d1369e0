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

#ifndef QDIST_STATES_HPP
#define QDIST_STATES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qdist/linalg.hpp"
#include "qdist/rng.hpp"

namespace qdist {

/// Validated quantum state: Hermitian within 1e-10, eigenvalues >= -1e-10,
/// |tr - 1| <= 1e-10. Immutable after construction.
class DensityMatrix {
public:
    /// Validates every invariant; the thrown Error names the violated one
    /// ("NonFiniteEntry", "NonHermitian", "NotPositiveSemidefinite",
    /// "TraceNotOne").
    static DensityMatrix from_matrix(ComplexMatrix m);

    std::size_t dim() const noexcept { return matrix_.dim(); }
    const ComplexMatrix& matrix() const noexcept { return matrix_; }

private:
    explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
    ComplexMatrix matrix_;
};

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// |psi><psi| from amplitudes, normalized to unit norm.
DensityMatrix pure_state(const std::vector<Complex>& amplitudes);

/// rho = (1 + x sigma_x + y sigma_y + z sigma_z) / 2.
DensityMatrix qubit_from_bloch(const BlochVector& r);

DensityMatrix maximally_mixed(std::size_t n);

/// alpha |0><0| + (1 - alpha) 1/N.
DensityMatrix family_rho_alpha(double alpha, std::size_t n);

/// beta |GHZ><GHZ| + (1 - beta) 1/8 with |GHZ> = (|000> + |111>)/sqrt(2),
/// basis order |abc> -> 4a + 2b + c.
DensityMatrix family_sigma_beta(double beta);

/// gamma |010><010| + (1 - gamma) 1/8; |010> is basis index 2.
DensityMatrix family_tau_gamma(double gamma);

/// Ginibre-induced random state: rho = G G^dagger / tr(G G^dagger) with G
/// an N x rank matrix of standard complex Gaussians. Full rank induces the
/// Hilbert-Schmidt measure.
DensityMatrix random_density(std::size_t n, std::size_t rank, RngSpec rng);

/// Haar-distributed unitary: Gram-Schmidt on a complex Ginibre matrix with
/// the R-diagonal phase correction.
ComplexMatrix random_unitary(std::size_t n, RngSpec rng);

/// tr rho^2.
double purity(const DensityMatrix& rho);

/// Kronecker product of states, revalidated.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// --- state file format ---------------------------------------------------
// A single text object: {"dim": N, "entries": [[re, im], ...]} with dim^2
// row-major pairs in plain decimal floating-point literals.

std::string state_to_text(const DensityMatrix& rho);
DensityMatrix state_from_text(const std::string& text);
DensityMatrix load_state_file(const std::string& path);
void save_state_file(const DensityMatrix& rho, const std::string& path);

}  // namespace qdist

#endif  // QDIST_STATES_HPP
