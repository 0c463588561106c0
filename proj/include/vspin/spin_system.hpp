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

#include <cmath>
#include <numbers>
#include <string>

#include "vspin/linalg.hpp"

namespace vspin {

// Two spin-1/2 nuclei I and S in a static field H0 along z, coupled by an
// isotropic exchange term J(I.S). All Hamiltonians and energies are stored
// as angular frequencies (rad/s); hbar never appears.
//
//   H = omega0 (Iz+Sz) + delta/2 (Iz-Sz) + J (I.S)
//   omega0 = (gamma_i + gamma_s) H0 / 2,   delta = -(gamma_i - gamma_s) H0

/// Physical constants of the pair plus the derived Larmor combinations.
/// Immutable after construction; build through one of the factories below.
struct spin_system_params {
    double gamma_i = 0.0;  ///< gyromagnetic ratio of spin I (rad s^-1 T^-1)
    double gamma_s = 0.0;  ///< gyromagnetic ratio of spin S (rad s^-1 T^-1)
    double h0 = 0.0;       ///< static field (T)
    double j = 0.0;        ///< exchange integral (rad/s)
    double omega0 = 0.0;   ///< mean Larmor angular frequency (rad/s)
    double delta = 0.0;    ///< Larmor difference, -(gamma_i - gamma_s) H0 (rad/s)
};

namespace detail {

inline void check_finite(double v, const char *name) {
    if (!std::isfinite(v))
        throw invalid_parameter_error(std::string("non-finite parameter: ") + name);
}

}  // namespace detail

/// Build from gyromagnetic ratios and field; omega0/delta are derived.
inline spin_system_params params_from_gammas(double gamma_i, double gamma_s, double h0,
                                             double j) {
    detail::check_finite(gamma_i, "gamma_i");
    detail::check_finite(gamma_s, "gamma_s");
    detail::check_finite(h0, "h0");
    detail::check_finite(j, "j");
    if (h0 < 0.0) throw invalid_parameter_error("h0 must be >= 0");
    spin_system_params p;
    p.gamma_i = gamma_i;
    p.gamma_s = gamma_s;
    p.h0 = h0;
    p.j = j;
    p.omega0 = 0.5 * (gamma_i + gamma_s) * h0;
    p.delta = -(gamma_i - gamma_s) * h0;
    return p;
}

/// Build from the Larmor combinations directly. A synthetic unit field and the
/// matching gyromagnetic ratios are filled in so the derived-field relations
/// still hold (up to rounding when |delta| << |omega0|).
inline spin_system_params params_from_larmor(double omega0, double delta, double j) {
    detail::check_finite(omega0, "omega0");
    detail::check_finite(delta, "delta");
    detail::check_finite(j, "j");
    spin_system_params p;
    p.gamma_i = omega0 - 0.5 * delta;
    p.gamma_s = omega0 + 0.5 * delta;
    p.h0 = 1.0;
    p.j = j;
    p.omega0 = omega0;
    p.delta = delta;
    return p;
}

/// One state of the canonical product basis (|++>, |+->, |-+>, |-->).
/// m values are the spin projections, +1/2 or -1/2; index is the position in
/// the canonical order.
struct product_basis_state {
    double m_i;
    double m_s;
    int index;
};

inline const std::array<product_basis_state, 4> &product_basis() {
    static const std::array<product_basis_state, 4> basis = {{
        {+0.5, +0.5, 0},
        {+0.5, -0.5, 1},
        {-0.5, +0.5, 2},
        {-0.5, -0.5, 3},
    }};
    return basis;
}

/// Index of |m_i m_s> in the canonical order; the (m_i, m_s) <-> index map is
/// a bijection.
inline int product_index(double m_i, double m_s) {
    if (std::abs(std::abs(m_i) - 0.5) > 1e-12 || std::abs(std::abs(m_s) - 0.5) > 1e-12)
        throw invalid_parameter_error("spin projections must be +1/2 or -1/2");
    return (m_i > 0 ? 0 : 2) + (m_s > 0 ? 0 : 1);
}

/// The single-spin operators and I.S, all 4x4 in the canonical product basis.
struct spin_operators {
    mat4 ix, iy, iz;
    mat4 sx, sy, sz;
    mat4 dot;  ///< I.S = Ix Sx + Iy Sy + Iz Sz
};

namespace detail {

using mat2 = std::array<cplx, 4>;  // row-major 2x2

inline mat4 kron(const mat2 &a, const mat2 &b) {
    mat4 r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    r(2 * i + k, 2 * j + l) =
                        a[static_cast<size_t>(2 * i + j)] * b[static_cast<size_t>(2 * k + l)];
    return r;
}

inline spin_operators make_spin_operators() {
    const cplx im(0.0, 1.0);
    const mat2 half_x = {0.0, 0.5, 0.5, 0.0};
    const mat2 half_y = {0.0, -0.5 * im, 0.5 * im, 0.0};
    const mat2 half_z = {0.5, 0.0, 0.0, -0.5};
    const mat2 one = {1.0, 0.0, 0.0, 1.0};
    spin_operators ops;
    ops.ix = kron(half_x, one);
    ops.iy = kron(half_y, one);
    ops.iz = kron(half_z, one);
    ops.sx = kron(one, half_x);
    ops.sy = kron(one, half_y);
    ops.sz = kron(one, half_z);
    ops.dot = ops.ix * ops.sx + ops.iy * ops.sy + ops.iz * ops.sz;
    return ops;
}

}  // namespace detail

inline const spin_operators &spin_ops() {
    static const spin_operators ops = detail::make_spin_operators();
    return ops;
}

/// H = omega0 (Iz+Sz) + delta/2 (Iz-Sz) + J (I.S), Hermitian and traceless,
/// in the canonical product basis.
inline mat4 build_hamiltonian(const spin_system_params &p) {
    detail::check_finite(p.omega0, "omega0");
    detail::check_finite(p.delta, "delta");
    detail::check_finite(p.j, "j");
    const spin_operators &op = spin_ops();
    return p.omega0 * (op.iz + op.sz) + (0.5 * p.delta) * (op.iz - op.sz) + p.j * op.dot;
}

/// Exact eigensystem of the pair, labelled 1..4:
///
///   psi1 = |++>                    eps1 = omega0 + J/4
///   psi2 = p|+-> + q|-+>           eps2 = -J/4 + theta/2
///   psi3 = p|-+> - q|+->           eps3 = -J/4 - theta/2
///   psi4 = |-->                    eps4 = -omega0 + J/4
///
/// with theta = sqrt(J^2 + delta^2), tan(phi) = J/delta (-pi/2 <= phi <= pi/2),
/// p = cos(phi/2), q = sin(phi/2). The label <-> energy pairing of levels 2, 3
/// holds for delta >= 0; for delta < 0 the (p,q) vector carries eps3 instead
/// (the labels follow the closed form, not the energy order).
struct eigensystem {
    std::array<double, 4> energies{};  ///< eps1..eps4 (rad/s), label order
    mat4 states;                       ///< columns psi1..psi4 in the product basis
    double theta = 0.0;                ///< sqrt(J^2 + delta^2), non-negative root
    double phi = 0.0;                  ///< mixing angle, [-pi/2, pi/2]
    double p = 1.0;                    ///< cos(phi/2)
    double q = 0.0;                    ///< sin(phi/2)
};

inline eigensystem analytic_eigensystem(const spin_system_params &prm) {
    detail::check_finite(prm.omega0, "omega0");
    detail::check_finite(prm.delta, "delta");
    detail::check_finite(prm.j, "j");

    eigensystem eg;
    eg.theta = std::hypot(prm.j, prm.delta);
    if (prm.delta != 0.0) {
        eg.phi = std::atan(prm.j / prm.delta);
    } else if (prm.j > 0.0) {
        eg.phi = std::numbers::pi / 2;
    } else if (prm.j < 0.0) {
        eg.phi = -std::numbers::pi / 2;
    } else {
        eg.phi = 0.0;  // fully degenerate: pick the product basis
    }
    eg.p = std::cos(0.5 * eg.phi);
    eg.q = std::sin(0.5 * eg.phi);

    eg.energies = {prm.omega0 + 0.25 * prm.j, -0.25 * prm.j + 0.5 * eg.theta,
                   -0.25 * prm.j - 0.5 * eg.theta, -prm.omega0 + 0.25 * prm.j};

    eg.states = mat4::zero();
    eg.states(0, 0) = 1.0;
    eg.states(1, 1) = eg.p;
    eg.states(2, 1) = eg.q;
    eg.states(1, 2) = -eg.q;
    eg.states(2, 2) = eg.p;
    eg.states(3, 3) = 1.0;
    return eg;
}

/// Independent numeric oracle for the eigensystem: cyclic Jacobi rotations,
/// no shared code path with analytic_eigensystem. Eigenvalues ascending;
/// eigenvectors orthonormal columns.
inline hermitian_eigen numeric_diagonalize(const mat4 &h) {
    if (!is_hermitian(h, 1e-10))
        throw contract_error("numeric_diagonalize: input is not Hermitian");
    return jacobi_eigen(h);
}

}  // namespace vspin
