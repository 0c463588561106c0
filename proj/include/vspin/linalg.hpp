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

#include <array>
#include <cmath>
#include <complex>

#include "vspin/errors.hpp"

namespace vspin {

using cplx = std::complex<double>;
using vec4 = std::array<cplx, 4>;

/// Dense 4x4 complex matrix, row-major. The whole library works in a fixed
/// four-dimensional Hilbert space, so everything is stack-allocated and the
/// heavy routines (Jacobi, expm) are written for this size only.
struct mat4 {
    std::array<cplx, 16> a{};

    cplx &operator()(int i, int j) { return a[static_cast<size_t>(4 * i + j)]; }
    const cplx &operator()(int i, int j) const { return a[static_cast<size_t>(4 * i + j)]; }

    static mat4 zero() { return mat4{}; }

    static mat4 identity() {
        mat4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
        return m;
    }

    static mat4 diagonal(const std::array<double, 4> &d) {
        mat4 m;
        for (int i = 0; i < 4; ++i) m(i, i) = d[static_cast<size_t>(i)];
        return m;
    }

    bool operator==(const mat4 &) const = default;
};

inline mat4 operator+(const mat4 &x, const mat4 &y) {
    mat4 r;
    for (size_t k = 0; k < 16; ++k) r.a[k] = x.a[k] + y.a[k];
    return r;
}

inline mat4 operator-(const mat4 &x, const mat4 &y) {
    mat4 r;
    for (size_t k = 0; k < 16; ++k) r.a[k] = x.a[k] - y.a[k];
    return r;
}

inline mat4 operator*(const cplx &s, const mat4 &x) {
    mat4 r;
    for (size_t k = 0; k < 16; ++k) r.a[k] = s * x.a[k];
    return r;
}

inline mat4 operator*(double s, const mat4 &x) { return cplx(s, 0.0) * x; }

inline mat4 operator*(const mat4 &x, const mat4 &y) {
    mat4 r;
    for (int i = 0; i < 4; ++i) {
        for (int k = 0; k < 4; ++k) {
            const cplx xik = x(i, k);
            if (xik == 0.0) continue;
            for (int j = 0; j < 4; ++j) r(i, j) += xik * y(k, j);
        }
    }
    return r;
}

inline vec4 operator*(const mat4 &x, const vec4 &v) {
    vec4 r{};
    for (int i = 0; i < 4; ++i) {
        cplx s = 0.0;
        for (int j = 0; j < 4; ++j) s += x(i, j) * v[static_cast<size_t>(j)];
        r[static_cast<size_t>(i)] = s;
    }
    return r;
}

inline mat4 adjoint(const mat4 &x) {
    mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = std::conj(x(j, i));
    return r;
}

inline cplx trace(const mat4 &x) { return x(0, 0) + x(1, 1) + x(2, 2) + x(3, 3); }

inline double max_abs(const mat4 &x) {
    double m = 0.0;
    for (const cplx &v : x.a) m = std::max(m, std::abs(v));
    return m;
}

inline double frobenius_norm(const mat4 &x) {
    double s = 0.0;
    for (const cplx &v : x.a) s += std::norm(v);
    return std::sqrt(s);
}

/// <u|v> with the first argument conjugated.
inline cplx inner(const vec4 &u, const vec4 &v) {
    cplx s = 0.0;
    for (size_t k = 0; k < 4; ++k) s += std::conj(u[k]) * v[k];
    return s;
}

inline double norm(const vec4 &v) { return std::sqrt(std::real(inner(v, v))); }

inline vec4 column(const mat4 &x, int j) {
    return {x(0, j), x(1, j), x(2, j), x(3, j)};
}

inline void set_column(mat4 &x, int j, const vec4 &v) {
    for (int i = 0; i < 4; ++i) x(i, j) = v[static_cast<size_t>(i)];
}

/// max |(U^dag U - 1)_ij|; zero for an exactly unitary U.
inline double unitarity_error(const mat4 &u) {
    return max_abs(adjoint(u) * u - mat4::identity());
}

inline bool is_hermitian(const mat4 &h, double tol = 1e-10) {
    const double scale = std::max(1.0, max_abs(h));
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j)
            if (std::abs(h(i, j) - std::conj(h(j, i))) > tol * scale) return false;
    return true;
}

/// Eigendecomposition of a Hermitian matrix: values ascending, vectors as the
/// columns of a unitary matrix, H = V diag(values) V^dag.
struct hermitian_eigen {
    std::array<double, 4> values{};
    mat4 vectors;
};

namespace detail {

// Root-sum-square of the off-diagonal part.
inline double off_diagonal_norm(const mat4 &h) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) s += std::norm(h(i, j));
    return std::sqrt(s);
}

}  // namespace detail

/// Cyclic Jacobi diagonalization for 4x4 complex Hermitian matrices.
///
/// Each pivot (p,q) is annihilated by the unitary plane rotation
///   R(p,p)=c, R(p,q)=s*u, R(q,p)=-s*conj(u), R(q,q)=c,   u = H(p,q)/|H(p,q)|,
/// with (c,s) chosen exactly as in the real symmetric case applied to |H(p,q)|.
/// Sweeps stop when the off-diagonal norm drops below 1e-13 * ||H||_F, with a
/// hard cap of 30 sweeps. Input is assumed Hermitian; callers that accept
/// user matrices must check with is_hermitian() first.
inline hermitian_eigen jacobi_eigen(const mat4 &h_in) {
    mat4 h = h_in;
    mat4 v = mat4::identity();
    const double stop = 1e-13 * std::max(frobenius_norm(h), 1e-300);

    for (int sweep = 0; sweep < 30; ++sweep) {
        if (detail::off_diagonal_norm(h) <= stop) break;
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const double apq = std::abs(h(p, q));
                if (apq <= stop * 1e-3) continue;
                const double app = std::real(h(p, p));
                const double aqq = std::real(h(q, q));
                const cplx u = h(p, q) / apq;

                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Apply H <- R^dag H R on the affected rows/columns only.
                for (int k = 0; k < 4; ++k) {
                    const cplx hkp = h(k, p);
                    const cplx hkq = h(k, q);
                    h(k, p) = c * hkp - s * std::conj(u) * hkq;
                    h(k, q) = s * u * hkp + c * hkq;
                }
                for (int k = 0; k < 4; ++k) {
                    const cplx hpk = h(p, k);
                    const cplx hqk = h(q, k);
                    h(p, k) = c * hpk - s * u * hqk;
                    h(q, k) = s * std::conj(u) * hpk + c * hqk;
                }
                h(p, q) = 0.0;
                h(q, p) = 0.0;

                for (int k = 0; k < 4; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(u) * vkq;
                    v(k, q) = s * u * vkp + c * vkq;
                }
            }
        }
    }

    hermitian_eigen out;
    std::array<int, 4> order{0, 1, 2, 3};
    std::array<double, 4> diag{};
    for (int i = 0; i < 4; ++i) diag[static_cast<size_t>(i)] = std::real(h(i, i));
    // Insertion sort keeps tied eigenvalues in original (deterministic) order.
    for (int i = 1; i < 4; ++i) {
        const int oi = order[static_cast<size_t>(i)];
        int j = i - 1;
        while (j >= 0 && diag[static_cast<size_t>(order[static_cast<size_t>(j)])] >
                             diag[static_cast<size_t>(oi)]) {
            order[static_cast<size_t>(j + 1)] = order[static_cast<size_t>(j)];
            --j;
        }
        order[static_cast<size_t>(j + 1)] = oi;
    }
    for (int i = 0; i < 4; ++i) {
        out.values[static_cast<size_t>(i)] = diag[static_cast<size_t>(order[static_cast<size_t>(i)])];
        set_column(out.vectors, i, column(v, order[static_cast<size_t>(i)]));
    }
    return out;
}

/// Matrix exponential by scaling-and-squaring with a truncated Taylor series.
/// Intended for the skew-Hermitian generators -i*H*dt used throughout; the
/// term count is picked from the scaled norm so the truncation error stays
/// below ~1e-16 relative.
inline mat4 expm(const mat4 &a_in) {
    mat4 a = a_in;
    double nrm = 0.0;
    for (int i = 0; i < 4; ++i) {
        double row = 0.0;
        for (int j = 0; j < 4; ++j) row += std::abs(a(i, j));
        nrm = std::max(nrm, row);
    }

    int squarings = 0;
    if (nrm > 0.25) {
        squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.25)));
        a = std::ldexp(1.0, -squarings) * a;
        nrm = std::ldexp(nrm, -squarings);
    }

    int terms = 13;
    if (nrm <= 0.03) terms = 8;
    else if (nrm <= 0.12) terms = 10;

    // Horner evaluation: I + A(I + A/2(I + A/3(...))).
    mat4 e = mat4::identity();
    for (int k = terms; k >= 1; --k) {
        e = (1.0 / k) * (a * e);
        e = e + mat4::identity();
    }
    for (int k = 0; k < squarings; ++k) e = e * e;
    return e;
}

/// Largest singular value, via Jacobi on A^dag A.
inline double spectral_norm(const mat4 &a) {
    const hermitian_eigen eg = jacobi_eigen(adjoint(a) * a);
    return std::sqrt(std::max(0.0, eg.values[3]));
}

}  // namespace vspin
