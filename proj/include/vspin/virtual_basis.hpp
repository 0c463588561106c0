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

#include <string>

#include "vspin/spin_system.hpp"

namespace vspin {

// The two qubits live on virtual spins Q and R whose four joint states are
// the Hamiltonian eigenstates:
//
//   |00> = psi1,  |01> = psi2,  |10> = psi3,  |11> = psi4
//
// with bit value 0 <-> m = -1/2 and 1 <-> m = +1/2 on each virtual spin.
// The first symbol of |QR> is Q. Note that Q and R always name virtual
// spins here; I and S always name the physical spins.

/// Label |qr> of one computational basis state.
struct qubit_label {
    int q = 0;  ///< virtual spin Q bit
    int r = 0;  ///< virtual spin R bit

    bool operator==(const qubit_label &) const = default;
};

/// Eigenstate label 1..4 assigned to |qr>; a total bijection.
inline int eigenindex_for_label(const qubit_label &label) {
    if ((label.q != 0 && label.q != 1) || (label.r != 0 && label.r != 1))
        throw invalid_parameter_error("qubit label bits must be 0 or 1");
    return 2 * label.q + label.r + 1;
}

inline qubit_label label_for_eigenindex(int index) {
    if (index < 1 || index > 4)
        throw invalid_parameter_error("eigenstate index must be 1..4");
    return qubit_label{(index - 1) / 2, (index - 1) % 2};
}

inline std::string to_string(const qubit_label &label) {
    return std::string(1, static_cast<char>('0' + label.q)) +
           static_cast<char>('0' + label.r);
}

enum class basis_tag { product, eigen };

/// A normalized pure state, tagged with the basis its four amplitudes are
/// expressed in. "eigen" amplitudes are coefficients on psi1..psi4, i.e.
/// on the computational basis |00>, |01>, |10>, |11>.
struct state_vector {
    vec4 amplitudes{};
    basis_tag basis = basis_tag::eigen;
};

inline state_vector basis_state(const qubit_label &label) {
    state_vector s;
    s.basis = basis_tag::eigen;
    s.amplitudes[static_cast<size_t>(eigenindex_for_label(label) - 1)] = 1.0;
    return s;
}

namespace detail {

inline void check_normalized(const state_vector &s, double tol = 1e-12) {
    if (std::abs(norm(s.amplitudes) - 1.0) > tol)
        throw contract_error("state vector is not normalized");
}

}  // namespace detail

/// Product-basis amplitudes -> eigenbasis amplitudes, c_i = <psi_i|state>.
/// Unitary change of basis; composing with to_product() gives the identity.
inline state_vector to_computational(const state_vector &s, const eigensystem &eg) {
    if (s.basis != basis_tag::product)
        throw contract_error("to_computational expects a product-basis state");
    detail::check_normalized(s);
    state_vector out;
    out.basis = basis_tag::eigen;
    for (int i = 0; i < 4; ++i)
        out.amplitudes[static_cast<size_t>(i)] = inner(column(eg.states, i), s.amplitudes);
    return out;
}

/// Inverse of to_computational().
inline state_vector to_product(const state_vector &s, const eigensystem &eg) {
    if (s.basis != basis_tag::eigen)
        throw contract_error("to_product expects an eigenbasis state");
    detail::check_normalized(s);
    state_vector out;
    out.basis = basis_tag::product;
    out.amplitudes = eg.states * s.amplitudes;
    return out;
}

/// |c_i|^2 keyed by label: entry (2q + r) is the population of |qr>.
/// Sums to 1 for a normalized input.
inline std::array<double, 4> populations(const state_vector &s) {
    if (s.basis != basis_tag::eigen)
        throw contract_error("populations expects an eigenbasis state");
    detail::check_normalized(s);
    std::array<double, 4> p{};
    for (size_t i = 0; i < 4; ++i) p[i] = std::norm(s.amplitudes[i]);
    return p;
}

}  // namespace vspin
