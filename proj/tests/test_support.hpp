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

#pragma once

#include <random>

#include "vspin/gate.hpp"

namespace vspin::test {

inline double log_uniform(std::mt19937_64 &rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
    return std::exp(d(rng));
}

inline double uniform(std::mt19937_64 &rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng);
}

/// Random draw over the full documented parameter ranges:
/// log-uniform J, delta in [1e-2, 1e4], omega0 in [10, 1e6].
inline spin_system_params random_params(std::mt19937_64 &rng) {
    return params_from_larmor(log_uniform(rng, 10.0, 1e6), log_uniform(rng, 1e-2, 1e4),
                              log_uniform(rng, 1e-2, 1e4));
}

/// Random draw in the well-resolved gate regime: J and delta within a factor
/// 1.5 of each other and omega0 well above every line splitting, so all four
/// lines are positive, distinct, and selectively addressable.
inline spin_system_params random_gate_params(std::mt19937_64 &rng) {
    const double j = log_uniform(rng, 1.0, 1e3);
    const double delta = j * log_uniform(rng, 1.0 / 1.5, 1.5);
    const double omega0 = std::hypot(j, delta) * uniform(rng, 10.0, 60.0);
    return params_from_larmor(omega0, delta, j);
}

inline mat4 random_hermitian(std::mt19937_64 &rng, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    mat4 h;
    for (int i = 0; i < 4; ++i) {
        h(i, i) = g(rng);
        for (int j = i + 1; j < 4; ++j) {
            const cplx v(g(rng), g(rng));
            h(i, j) = v;
            h(j, i) = std::conj(v);
        }
    }
    return h;
}

inline mat4 random_unitary(std::mt19937_64 &rng) {
    return expm(cplx(0.0, -1.0) * random_hermitian(rng));
}

inline state_vector random_state(std::mt19937_64 &rng, basis_tag basis) {
    std::normal_distribution<double> g(0.0, 1.0);
    state_vector s;
    s.basis = basis;
    double n = 0.0;
    while (n < 1e-6) {
        for (cplx &a : s.amplitudes) a = cplx(g(rng), g(rng));
        n = norm(s.amplitudes);
    }
    for (cplx &a : s.amplitudes) a /= n;
    return s;
}

/// Spectral-norm distance min over global phase of ||a - e^{i g} b||_2.
inline double phase_aligned_distance(const mat4 &a, const mat4 &b) {
    const cplx t = trace(adjoint(a) * b);
    const cplx g = std::abs(t) > 0.0 ? t / std::abs(t) : cplx(1.0, 0.0);
    return spectral_norm(a - std::conj(g) * b);
}

}  // namespace vspin::test
