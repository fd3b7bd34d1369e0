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

#include "qdist/linalg.hpp"
#include "test_helpers.hpp"

using namespace qdist;
using namespace qdist_test;

namespace {

ComplexMatrix diag(std::initializer_list<double> values) {
    ComplexMatrix m(values.size());
    std::size_t i = 0;
    for (double v : values) m(i, i) = v, ++i;
    return m;
}

}  // namespace

TEST_CASE("eigh on the 3x3 identity") {
    const EigenDecomposition ed = eigh(ComplexMatrix::identity(3));
    for (double lambda : ed.eigenvalues) CHECK(lambda == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigh on diag(2, -1) sorts ascending with permuted identity vectors") {
    const EigenDecomposition ed = eigh(diag({2.0, -1.0}));
    CHECK(ed.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(ed.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(ed.eigenvectors(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(ed.eigenvectors(0, 1)) == doctest::Approx(1.0));
    CHECK(std::abs(ed.eigenvectors(0, 0)) == doctest::Approx(0.0));
}

TEST_CASE("eigh on Pauli X") {
    // Characteristic polynomial of [[0,1],[1,0]] is lambda^2 - 1.
    ComplexMatrix x(2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    const EigenDecomposition ed = eigh(x);
    CHECK(ed.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(ed.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // Columns are (1,-1)/sqrt(2) and (1,1)/sqrt(2) up to a global phase.
    CHECK(std::abs(ed.eigenvectors(0, 0)) == doctest::Approx(inv_sqrt2).epsilon(1e-10));
    CHECK(std::abs(ed.eigenvectors(0, 0) + ed.eigenvectors(1, 0)) ==
          doctest::Approx(0.0).epsilon(1e-10));
    CHECK(std::abs(ed.eigenvectors(0, 1) - ed.eigenvectors(1, 1)) ==
          doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("eigh rejects non-Hermitian input") {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    CHECK_THROWS_WITH_AS(eigh(m), doctest::Contains("NonHermitianInput"), Error);
}

TEST_CASE("eigh is deterministic for identical input") {
    const ComplexMatrix m = random_hermitian(6, {42, 0});
    const EigenDecomposition a = eigh(m);
    const EigenDecomposition b = eigh(m);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(a.eigenvectors.entries() == b.eigenvectors.entries());
}

TEST_CASE("eigh reconstruction and unitarity over random Hermitian corpus") {
    // 1000 matrices per dim in {2..16}.
    for (std::size_t n = 2; n <= 16; ++n) {
        double worst_recon = 0.0;
        double worst_unit = 0.0;
        for (std::uint64_t i = 0; i < 1000; ++i) {
            const ComplexMatrix m = random_hermitian(n, {7, n * 10000 + i});
            const EigenDecomposition ed = eigh(m);
            worst_recon = std::max(worst_recon, reconstruction_error(ed, m) /
                                                    (1.0 + m.frobenius_norm()));
            worst_unit = std::max(worst_unit, unitarity_defect(ed.eigenvectors));
        }
        CHECK(worst_recon <= 1e-10);
        CHECK(worst_unit <= 1e-10);
    }
}

TEST_CASE("matrix_sqrt_psd examples") {
    const ComplexMatrix s1 = matrix_sqrt_psd(ComplexMatrix::identity(3));
    CHECK((s1 - ComplexMatrix::identity(3)).max_abs() <= 1e-12);

    const ComplexMatrix s2 = matrix_sqrt_psd(diag({4.0, 9.0}));
    CHECK(s2(0, 0).real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s2(1, 1).real() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("matrix_sqrt_psd rejects indefinite input") {
    CHECK_THROWS_WITH_AS(matrix_sqrt_psd(diag({1.0, -0.5})),
                         doctest::Contains("NotPositiveSemidefinite"), Error);
}

TEST_CASE("matrix_sqrt_psd squares back over random PSD corpus") {
    for (std::size_t n = 2; n <= 16; ++n) {
        for (std::uint64_t i = 0; i < 100; ++i) {
            const ComplexMatrix m = random_psd(n, {11, n * 1000 + i});
            const ComplexMatrix s = matrix_sqrt_psd(m);
            CHECK(s.hermiticity_defect() <= 1e-9 * (1.0 + m.max_abs()));
            CHECK((s * s - m).frobenius_norm() <= 1e-9 * (1.0 + m.frobenius_norm()));
        }
    }
}

TEST_CASE("trace_norm examples") {
    CHECK(trace_norm(ComplexMatrix(3)) == 0.0);
    CHECK(trace_norm(diag({1.0, -1.0})) == doctest::Approx(2.0).epsilon(1e-14));
    // |0><0| - 1/2 has eigenvalues +-1/2.
    CHECK(trace_norm(diag({0.5, -0.5})) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("trace_norm matches eigenvalue sum on random Hermitian matrices") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        const ComplexMatrix m = random_hermitian(5, {13, i});
        const EigenDecomposition ed = eigh(m);
        double expected = 0.0;
        for (double lambda : ed.eigenvalues) expected += std::fabs(lambda);
        CHECK(trace_norm(m) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("split_projectors examples") {
    SUBCASE("diag(1, -1)") {
        const auto [plus, minus] = split_projectors(diag({1.0, -1.0}), 1e-12);
        CHECK((plus - diag({1.0, 0.0})).max_abs() <= 1e-12);
        CHECK((minus - diag({0.0, 1.0})).max_abs() <= 1e-12);
    }
    SUBCASE("zero matrix gives empty projectors") {
        const auto [plus, minus] = split_projectors(ComplexMatrix(3), 1e-12);
        CHECK(plus.max_abs() == 0.0);
        CHECK(minus.max_abs() == 0.0);
    }
    SUBCASE("|0><0| - |1><1|") {
        const auto [plus, minus] = split_projectors(diag({1.0, -1.0, 0.0}), 1e-12);
        CHECK(plus(0, 0).real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(minus(1, 1).real() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(plus(2, 2).real() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(minus(2, 2).real() == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("split_projectors invariants over random Hermitian matrices") {
    for (std::uint64_t i = 0; i < 200; ++i) {
        const std::size_t n = 2 + (i % 7);
        const ComplexMatrix h = random_hermitian(n, {17, i});
        const auto [plus, minus] = split_projectors(h, 1e-12);
        CHECK((plus * plus - plus).max_abs() <= 1e-10);
        CHECK((minus * minus - minus).max_abs() <= 1e-10);
        CHECK(plus.hermiticity_defect() <= 1e-10);
        CHECK(minus.hermiticity_defect() <= 1e-10);
        CHECK((plus * minus).max_abs() <= 1e-10);
        // Gaussian spectra stay clear of 0, so the trace identity applies.
        const double identity = hs_inner(plus, h) - hs_inner(minus, h);
        CHECK(std::fabs(identity - trace_norm(h)) <= 1e-9 * (1.0 + trace_norm(h)));
    }
}

TEST_CASE("kronecker examples") {
    const ComplexMatrix i4 = kronecker(ComplexMatrix::identity(2), ComplexMatrix::identity(2));
    CHECK((i4 - ComplexMatrix::identity(4)).max_abs() == 0.0);

    const ComplexMatrix d = kronecker(diag({1.0, 2.0}), diag({3.0, 4.0}));
    CHECK((d - diag({3.0, 4.0, 6.0, 8.0})).max_abs() == 0.0);

    const ComplexMatrix p = kronecker(diag({1.0, 0.0}), diag({0.5, 0.5}));
    CHECK((p - diag({0.5, 0.5, 0.0, 0.0})).max_abs() == 0.0);
}

TEST_CASE("kronecker mixed-product property") {
    for (std::uint64_t i = 0; i < 50; ++i) {
        const ComplexMatrix a = random_dense(2, {19, 4 * i});
        const ComplexMatrix b = random_dense(3, {19, 4 * i + 1});
        const ComplexMatrix c = random_dense(2, {19, 4 * i + 2});
        const ComplexMatrix d = random_dense(3, {19, 4 * i + 3});
        const ComplexMatrix lhs = kronecker(a, b) * kronecker(c, d);
        const ComplexMatrix rhs = kronecker(a * c, b * d);
        CHECK((lhs - rhs).max_abs() <= 1e-10 * (1.0 + rhs.max_abs()));
    }
}

TEST_CASE("hs_inner examples and errors") {
    CHECK(hs_inner(diag({1.0, 0.0}), diag({0.0, 1.0})) == 0.0);
    CHECK(hs_inner(diag({0.5, 0.5}), ComplexMatrix::identity(2)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_WITH_AS(hs_inner(diag({1.0}), diag({1.0, 0.0})),
                         doctest::Contains("DimensionMismatch"), Error);
    ComplexMatrix skew(2);
    skew(0, 1) = Complex(0.0, 1.0);
    skew(1, 0) = Complex(0.0, 1.0);
    CHECK_THROWS_WITH_AS(hs_inner(skew, ComplexMatrix::identity(2)),
                         doctest::Contains("NonHermitianInput"), Error);
}
