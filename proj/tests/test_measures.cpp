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

#include <cmath>

#include <doctest.h>

#include "qdist/measures.hpp"
#include "test_helpers.hpp"

using namespace qdist;
using namespace qdist_test;

namespace {

DensityMatrix basis_state(std::size_t index, std::size_t dim) {
    std::vector<Complex> amps(dim, 0.0);
    amps[index] = 1.0;
    return pure_state(amps);
}

DensityMatrix half_support(std::size_t offset) {
    // diag(1/2, 1/2, 0, 0) shifted by offset
    ComplexMatrix m(4);
    m(offset, offset) = 0.5;
    m(offset + 1, offset + 1) = 0.5;
    return DensityMatrix::from_matrix(std::move(m));
}

}  // namespace

TEST_CASE("trace_distance basics") {
    const DensityMatrix zero = basis_state(0, 2);
    const DensityMatrix one = basis_state(1, 2);
    CHECK(trace_distance(zero, zero) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(trace_distance(zero, one) == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t n : {2, 4, 7})
        CHECK(trace_distance(basis_state(0, n), maximally_mixed(n)) ==
              doctest::Approx(1.0 - 1.0 / n).epsilon(1e-12));
    CHECK_THROWS_WITH_AS(trace_distance(zero, maximally_mixed(3)),
                         doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("projector form agrees with the direct trace distance") {
    const DensityMatrix zero = basis_state(0, 2);
    const DensityMatrix one = basis_state(1, 2);
    CHECK(trace_distance_projector_form(zero, zero) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(trace_distance_projector_form(zero, one) == doctest::Approx(1.0).epsilon(1e-12));

    for (std::size_t n = 2; n <= 8; ++n) {
        for (std::uint64_t i = 0; i < 100; ++i) {
            // Mixed ranks, including rank-deficient differences.
            const std::size_t ranks[3] = {1, (n + 1) / 2, n};
            const DensityMatrix a = random_density(n, ranks[i % 3], {n * 100, 2 * i});
            const DensityMatrix b = random_density(n, ranks[(i / 3) % 3], {n * 100, 2 * i + 1});
            CHECK(std::fabs(trace_distance(a, b) - trace_distance_projector_form(a, b)) <= 1e-9);
        }
    }
}

TEST_CASE("fidelity basics") {
    const DensityMatrix zero = basis_state(0, 2);
    const DensityMatrix one = basis_state(1, 2);
    const DensityMatrix mixed = maximally_mixed(2);
    CHECK(fidelity(zero, zero) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fidelity(zero, one) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(fidelity(zero, mixed) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(sqrt_fidelity(zero, mixed) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("fidelity of commuting diagonal states is the Bhattacharyya overlap") {
    ComplexMatrix pm(3);
    pm(0, 0) = 0.5;
    pm(1, 1) = 0.3;
    pm(2, 2) = 0.2;
    ComplexMatrix qm(3);
    qm(0, 0) = 0.1;
    qm(1, 1) = 0.1;
    qm(2, 2) = 0.8;
    const DensityMatrix p = DensityMatrix::from_matrix(pm);
    const DensityMatrix q = DensityMatrix::from_matrix(qm);
    const double expected = std::sqrt(0.5 * 0.1) + std::sqrt(0.3 * 0.1) + std::sqrt(0.2 * 0.8);
    CHECK(sqrt_fidelity(p, q) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("superfidelity basics") {
    const DensityMatrix zero = basis_state(0, 2);
    CHECK(superfidelity(zero, zero) == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t n : {2, 5})
        CHECK(superfidelity(basis_state(0, n), maximally_mixed(n)) ==
              doctest::Approx(1.0 / n).epsilon(1e-12));

    // Orthogonal supports: fidelity vanishes, superfidelity does not.
    const DensityMatrix lo = half_support(0);
    const DensityMatrix hi = half_support(2);
    CHECK(fidelity(lo, hi) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(superfidelity(lo, hi) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d_b_prime(lo, hi) ==
          doctest::Approx(std::sqrt(2.0 - 2.0 * std::sqrt(0.5))).epsilon(1e-12));
}

TEST_CASE("bures and superfidelity distances") {
    const DensityMatrix zero = basis_state(0, 2);
    const DensityMatrix one = basis_state(1, 2);
    const DensityMatrix mixed = maximally_mixed(2);
    CHECK(bures_distance(zero, zero) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(bures_distance(zero, one) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(bures_distance(zero, mixed) ==
          doctest::Approx(std::sqrt(2.0 - 2.0 * std::sqrt(0.5))).epsilon(1e-12));
    CHECK(d_b_prime(zero, one) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(d_g(zero, one) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
    CHECK(d_g(zero, mixed) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("error probability") {
    const DensityMatrix zero = basis_state(0, 2);
    const DensityMatrix one = basis_state(1, 2);
    CHECK(error_probability(zero, zero) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(error_probability(zero, one) == doctest::Approx(0.0).epsilon(1e-12));
    for (std::size_t n : {2, 4, 8})
        CHECK(error_probability(basis_state(0, n), maximally_mixed(n)) ==
              doctest::Approx(0.5 / n).epsilon(1e-12));
}

TEST_CASE("measure_all is internally consistent") {
    const DensityMatrix zero = basis_state(0, 2);
    const DensityMatrix mixed = maximally_mixed(2);

    const MeasureSet same = measure_all(zero, zero);
    CHECK(same.d_tr == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(same.fidelity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(same.superfidelity == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(same.p_error == doctest::Approx(0.5).epsilon(1e-12));

    const MeasureSet m = measure_all(zero, mixed);
    CHECK(m.d_tr == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m.fidelity == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m.superfidelity == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m.d_g == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(m.sqrt_fidelity == doctest::Approx(std::sqrt(m.fidelity)).epsilon(1e-14));
    CHECK(m.bures ==
          doctest::Approx(std::sqrt(2.0 - 2.0 * m.sqrt_fidelity)).epsilon(1e-14));
}

TEST_CASE("measure invariants over a random corpus") {
    const double eps = 1e-9;
    for (std::size_t n = 2; n <= 8; ++n) {
        for (std::uint64_t i = 0; i < 100; ++i) {
            const std::size_t ranks[3] = {1, (n + 1) / 2, n};
            const DensityMatrix a = random_density(n, ranks[i % 3], {n * 555, 2 * i});
            const DensityMatrix b = random_density(n, ranks[(i / 3) % 3], {n * 555, 2 * i + 1});
            const MeasureSet m = measure_all(a, b);

            // Symmetry of each measure.
            const MeasureSet r = measure_all(b, a);
            CHECK(std::fabs(m.d_tr - r.d_tr) <= eps);
            CHECK(std::fabs(m.fidelity - r.fidelity) <= eps);
            CHECK(std::fabs(m.superfidelity - r.superfidelity) <= eps);
            CHECK(std::fabs(m.bures - r.bures) <= eps);

            // The bound chain.
            CHECK(m.fidelity <= m.superfidelity + eps);
            CHECK(1.0 - m.sqrt_fidelity <= m.d_tr + eps);
            CHECK(m.d_tr <= std::sqrt(std::max(0.0, 1.0 - m.fidelity)) + eps);
            CHECK(1.0 - m.superfidelity <= m.d_tr + eps);
            CHECK(1.0 - std::sqrt(std::max(0.0, m.superfidelity)) <= m.d_tr + eps);
            CHECK(0.5 * m.superfidelity >= m.p_error - eps);
        }
    }
}

TEST_CASE("fidelity equals superfidelity for qubits and pure states") {
    const double eps = 1e-9;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const DensityMatrix a = random_density(2, 1 + i % 2, {777, 2 * i});
        const DensityMatrix b = random_density(2, 2, {777, 2 * i + 1});
        CHECK(std::fabs(fidelity(a, b) - superfidelity(a, b)) <= eps);
    }
    for (std::uint64_t i = 0; i < 100; ++i) {
        const std::size_t n = 2 + i % 7;
        const DensityMatrix pure = random_density(n, 1, {888, 2 * i});
        const DensityMatrix any = random_density(n, n, {888, 2 * i + 1});
        CHECK(std::fabs(fidelity(pure, any) - superfidelity(pure, any)) <= eps);
    }
}

TEST_CASE("qubit trace distance matches half the Bloch distance") {
    CHECK(trace_distance(qubit_from_bloch({1.0, 0.0, 0.0}), qubit_from_bloch({0.0, 1.0, 0.0})) ==
          doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));

    for (std::uint64_t i = 0; i < 200; ++i) {
        GaussianStream g({1234, i});
        // Uniform-ish points inside the ball via rejection-free scaling.
        auto bloch = [&g]() {
            double x = g.next(), y = g.next(), z = g.next();
            const double norm = std::sqrt(x * x + y * y + z * z);
            const double r = std::cbrt(g.next_uniform());
            return BlochVector{r * x / norm, r * y / norm, r * z / norm};
        };
        const BlochVector r = bloch();
        const BlochVector s = bloch();
        const double euclid = std::sqrt((r.x - s.x) * (r.x - s.x) + (r.y - s.y) * (r.y - s.y) +
                                        (r.z - s.z) * (r.z - s.z));
        CHECK(std::fabs(trace_distance(qubit_from_bloch(r), qubit_from_bloch(s)) -
                        0.5 * euclid) <= 1e-9);
    }
}

TEST_CASE("unitary invariance of the main measures") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        const std::size_t n = 2 + i % 5;
        const DensityMatrix a = random_density(n, n, {4321, 3 * i});
        const DensityMatrix b = random_density(n, 1 + i % n, {4321, 3 * i + 1});
        const ComplexMatrix u = random_unitary(n, {4321, 3 * i + 2});
        const DensityMatrix ua = DensityMatrix::from_matrix(u * a.matrix() * u.adjoint());
        const DensityMatrix ub = DensityMatrix::from_matrix(u * b.matrix() * u.adjoint());
        CHECK(std::fabs(trace_distance(a, b) - trace_distance(ua, ub)) <= 1e-8);
        CHECK(std::fabs(fidelity(a, b) - fidelity(ua, ub)) <= 1e-8);
        CHECK(std::fabs(superfidelity(a, b) - superfidelity(ua, ub)) <= 1e-8);
    }
}
