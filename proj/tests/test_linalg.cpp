// Copyright 2026 The vspin Authors
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

#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace vspin;
using vspin::test::random_hermitian;

TEST_CASE("jacobi leaves a diagonal matrix alone", "[linalg]") {
    const mat4 h = mat4::diagonal({1.0, 2.0, 3.0, 4.0});
    const hermitian_eigen eg = jacobi_eigen(h);
    for (int i = 0; i < 4; ++i) {
        CHECK(eg.values[static_cast<size_t>(i)] == Catch::Approx(i + 1.0).margin(1e-14));
        CHECK(std::abs(eg.vectors(i, i)) == Catch::Approx(1.0).margin(1e-14));
    }
}

TEST_CASE("jacobi digests random Hermitian matrices", "[linalg]") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const mat4 h = random_hermitian(rng, trial % 2 ? 1.0 : 1e3);
        const hermitian_eigen eg = jacobi_eigen(h);
        const double hn = frobenius_norm(h);

        // Eigenvalue sum equals the trace.
        const double tr = std::real(trace(h));
        CHECK(std::abs(eg.values[0] + eg.values[1] + eg.values[2] + eg.values[3] - tr) <=
              1e-9 * std::max(1.0, hn));

        // Ascending order, orthonormal vectors, small residuals.
        CHECK(eg.values[0] <= eg.values[1]);
        CHECK(eg.values[1] <= eg.values[2]);
        CHECK(eg.values[2] <= eg.values[3]);
        CHECK(unitarity_error(eg.vectors) < 1e-12);
        for (int i = 0; i < 4; ++i) {
            const vec4 v = column(eg.vectors, i);
            vec4 r = h * v;
            for (size_t k = 0; k < 4; ++k) r[k] -= eg.values[static_cast<size_t>(i)] * v[k];
            CHECK(norm(r) <= 1e-9 * hn);
        }
    }
}

TEST_CASE("expm of zero is the identity", "[linalg]") {
    CHECK(max_abs(expm(mat4::zero()) - mat4::identity()) < 1e-15);
}

TEST_CASE("expm matches the spectral route for skew-Hermitian generators", "[linalg]") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        const double scale = trial % 3 == 0 ? 8.0 : 0.3;
        const mat4 h = random_hermitian(rng, scale);
        const mat4 via_taylor = expm(cplx(0.0, -1.0) * h);

        // Independent route: diagonalize and exponentiate the spectrum.
        const hermitian_eigen eg = jacobi_eigen(h);
        mat4 d;
        for (int i = 0; i < 4; ++i)
            d(i, i) = std::exp(cplx(0.0, -eg.values[static_cast<size_t>(i)]));
        const mat4 via_spectrum = eg.vectors * d * adjoint(eg.vectors);

        CHECK(max_abs(via_taylor - via_spectrum) < 1e-11 * std::max(1.0, scale));
        CHECK(unitarity_error(via_taylor) < 1e-13);
    }
}

TEST_CASE("expm reproduces a closed-form 2x2 rotation", "[linalg]") {
    // exp(-i a sx) embedded on levels (1,2): cos(a) on the diagonal,
    // -i sin(a) off the diagonal.
    const double a = 0.7;
    mat4 h;
    h(1, 2) = a;
    h(2, 1) = a;
    const mat4 u = expm(cplx(0.0, -1.0) * h);
    CHECK(std::abs(u(0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(u(3, 3) - 1.0) < 1e-14);
    CHECK(std::abs(u(1, 1) - std::cos(a)) < 1e-14);
    CHECK(std::abs(u(2, 2) - std::cos(a)) < 1e-14);
    CHECK(std::abs(u(1, 2) - cplx(0.0, -std::sin(a))) < 1e-14);
    CHECK(std::abs(u(2, 1) - cplx(0.0, -std::sin(a))) < 1e-14);
}

TEST_CASE("spectral norm of a unitary is 1", "[linalg]") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        const mat4 u = vspin::test::random_unitary(rng);
        CHECK(spectral_norm(u) == Catch::Approx(1.0).margin(1e-16 * 100));
    }
}

TEST_CASE("hermiticity test rejects asymmetric input", "[linalg]") {
    mat4 h = mat4::identity();
    h(0, 1) = cplx(0.0, 1e-3);
    CHECK_FALSE(is_hermitian(h));
    h(1, 0) = cplx(0.0, -1e-3);
    CHECK(is_hermitian(h));
}
