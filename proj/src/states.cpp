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

#include "qdist/states.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qdist/format.hpp"

namespace qdist {

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
    if (!m.all_finite())
        throw Error("NonFiniteEntry", "density matrix contains NaN or Inf");
    if (m.hermiticity_defect() > 1e-10)
        throw Error("NonHermitian", "density matrix is not Hermitian within 1e-10");
    const double tr = m.trace().real();
    if (std::fabs(tr - 1.0) > 1e-10)
        throw Error("TraceNotOne", "trace is " + format_double(tr));
    const EigenDecomposition ed = eigh(m);
    if (ed.eigenvalues.front() < -1e-10)
        throw Error("NotPositiveSemidefinite",
                    "smallest eigenvalue is " + format_double(ed.eigenvalues.front()));
    return DensityMatrix(std::move(m));
}

DensityMatrix pure_state(const std::vector<Complex>& amplitudes) {
    const std::size_t n = amplitudes.size();
    if (n == 0) throw Error("ZeroVector", "empty amplitude vector");
    double norm_sq = 0.0;
    for (const Complex& a : amplitudes) norm_sq += std::norm(a);
    if (norm_sq == 0.0) throw Error("ZeroVector", "all amplitudes are zero");
    const double inv = 1.0 / norm_sq;
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = amplitudes[i] * std::conj(amplitudes[j]) * inv;
    return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix qubit_from_bloch(const BlochVector& r) {
    const double norm_sq = r.x * r.x + r.y * r.y + r.z * r.z;
    if (norm_sq > 1.0 + 1e-12)
        throw Error("BlochNormExceeded", "|r| = " + format_double(std::sqrt(norm_sq)));
    ComplexMatrix m(2);
    m(0, 0) = 0.5 * (1.0 + r.z);
    m(1, 1) = 0.5 * (1.0 - r.z);
    m(0, 1) = Complex(0.5 * r.x, -0.5 * r.y);
    m(1, 0) = Complex(0.5 * r.x, 0.5 * r.y);
    return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix maximally_mixed(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0 / static_cast<double>(n);
    return DensityMatrix::from_matrix(std::move(m));
}

namespace {

DensityMatrix pure_mixture(std::size_t index, double weight, std::size_t n, const char* name) {
    if (weight < 0.0 || weight > 1.0)
        throw Error("ParameterOutOfRange", std::string(name) + " must lie in [0, 1]");
    ComplexMatrix m(n);
    const double off = (1.0 - weight) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = off;
    m(index, index) += weight;
    return DensityMatrix::from_matrix(std::move(m));
}

}  // namespace

DensityMatrix family_rho_alpha(double alpha, std::size_t n) {
    if (n < 2) throw Error("ParameterOutOfRange", "family_rho_alpha requires N >= 2");
    return pure_mixture(0, alpha, n, "alpha");
}

DensityMatrix family_sigma_beta(double beta) {
    if (beta < 0.0 || beta > 1.0)
        throw Error("ParameterOutOfRange", "beta must lie in [0, 1]");
    ComplexMatrix m(8);
    for (std::size_t i = 0; i < 8; ++i) m(i, i) = (1.0 - beta) / 8.0;
    // GHZ projector occupies the corners of the (|000>, |111>) block.
    m(0, 0) += beta / 2.0;
    m(7, 7) += beta / 2.0;
    m(0, 7) += beta / 2.0;
    m(7, 0) += beta / 2.0;
    return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix family_tau_gamma(double gamma) {
    return pure_mixture(2, gamma, 8, "gamma");
}

DensityMatrix random_density(std::size_t n, std::size_t rank, RngSpec rng) {
    if (rank < 1 || rank > n)
        throw Error("RankOutOfRange", "rank must lie in [1, N]");
    GaussianStream g(rng);
    // G is n x rank, row-major
    std::vector<Complex> ginibre(n * rank);
    for (Complex& z : ginibre) z = g.next_complex();

    ComplexMatrix m(n);
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < rank; ++k)
                s += ginibre[i * rank + k] * std::conj(ginibre[j * rank + k]);
            if (i == j) {
                m(i, i) = Complex(s.real(), 0.0);
                tr += s.real();
            } else {
                m(i, j) = s;
                m(j, i) = std::conj(s);
            }
        }
    }
    m *= Complex(1.0 / tr, 0.0);
    return DensityMatrix::from_matrix(std::move(m));
}

ComplexMatrix random_unitary(std::size_t n, RngSpec rng) {
    GaussianStream g(rng);
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = g.next_complex();

    // Modified Gram-Schmidt on columns. Normalizing by the positive column
    // norm is the R-diagonal phase correction: R ends up with positive real
    // diagonal, making Q the Haar-distributed coset representative.
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t prev = 0; prev < col; ++prev) {
            Complex proj = 0.0;
            for (std::size_t i = 0; i < n; ++i) proj += std::conj(a(i, prev)) * a(i, col);
            for (std::size_t i = 0; i < n; ++i) a(i, col) -= proj * a(i, prev);
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += std::norm(a(i, col));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) a(i, col) /= norm;
    }
    return a;
}

double purity(const DensityMatrix& rho) {
    return hs_inner(rho.matrix(), rho.matrix());
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
    return DensityMatrix::from_matrix(kronecker(a.matrix(), b.matrix()));
}

std::string state_to_text(const DensityMatrix& rho) {
    std::ostringstream out;
    out << "{\"dim\": " << rho.dim() << ", \"entries\": [";
    const std::size_t n = rho.dim();
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!first) out << ", ";
            first = false;
            const Complex z = rho.matrix()(i, j);
            out << "[" << format_double(z.real()) << ", " << format_double(z.imag()) << "]";
        }
    }
    out << "]}\n";
    return out.str();
}

DensityMatrix state_from_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("BadStateFile", std::string("parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries"))
        throw Error("BadStateFile", "expected object with \"dim\" and \"entries\"");
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 1)
        throw Error("BadStateFile", "\"dim\" must be a positive integer");
    const std::size_t n = doc["dim"].get<std::size_t>();
    const auto& entries = doc["entries"];
    if (!entries.is_array() || entries.size() != n * n)
        throw Error("BadStateFile", "\"entries\" must hold dim^2 [re, im] pairs");
    ComplexMatrix m(n);
    for (std::size_t k = 0; k < n * n; ++k) {
        const auto& pair = entries[k];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw Error("BadStateFile", "entry " + std::to_string(k) + " is not an [re, im] pair");
        m(k / n, k % n) = Complex(pair[0].get<double>(), pair[1].get<double>());
    }
    return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("BadStateFile", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return state_from_text(buf.str());
}

void save_state_file(const DensityMatrix& rho, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("BadStateFile", "cannot write " + path);
    out << state_to_text(rho);
}

}  // namespace qdist
