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

#include <numbers>

#include "vspin/pulse_engine.hpp"
#include "vspin/virtual_basis.hpp"

namespace vspin {

// Gates are named by their action on the |QR> basis:
//
//   rot_q(theta, phase)  rotation of virtual spin Q; two simultaneous tones
//                        on the 1<->3 and 2<->4 lines (the Q-flipping pair)
//   rot_r(theta, phase)  rotation of virtual spin R; tones on 1<->2 and 3<->4
//   cnot_q               NOT on R conditioned on Q=1; one pi tone on 3<->4,
//                        which swaps |10> <-> |11>
//   cnot_r               NOT on Q conditioned on R=1; one pi tone on 2<->4,
//                        which swaps |01> <-> |11>
//
// A pi pulse realizes its CNOT up to diagonal phases (the -i factors on the
// swapped block), so gates are scored with a phase-gauged fidelity that
// quotients out diagonal unitaries.

enum class gate_kind { rot_q, rot_r, cnot_q, cnot_r };

inline const char *to_string(gate_kind k) {
    switch (k) {
        case gate_kind::rot_q: return "rotq";
        case gate_kind::rot_r: return "rotr";
        case gate_kind::cnot_q: return "cnot_q";
        case gate_kind::cnot_r: return "cnot_r";
    }
    throw contract_error("unknown gate kind");
}

/// Abstract gate on the virtual qubits. angle in (-4pi, 4pi); axis phase in
/// [0, 2pi). Both are ignored for the CNOTs.
struct gate_spec {
    gate_kind kind = gate_kind::cnot_q;
    double angle = 0.0;
    double phase = 0.0;
};

namespace detail {

constexpr double four_pi = 4.0 * std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

inline void check_gate(const gate_spec &g) {
    if (g.kind == gate_kind::rot_q || g.kind == gate_kind::rot_r) {
        if (!std::isfinite(g.angle) || !(g.angle > -four_pi && g.angle < four_pi))
            throw invalid_parameter_error("rotation angle must lie in (-4pi, 4pi)");
        if (!std::isfinite(g.phase) || g.phase < 0.0 || g.phase >= two_pi)
            throw invalid_parameter_error("axis phase must lie in [0, 2pi)");
    }
}

/// 2x2 rotation exp(-i(angle/2)(cos(phase) sx + sin(phase) sy)) placed on
/// basis indices (i, j) of an identity matrix.
inline void put_rotation_block(mat4 &u, int i, int j, double angle, double phase) {
    const cplx off = cplx(0.0, -1.0) * std::sin(0.5 * angle);
    u(i, i) = std::cos(0.5 * angle);
    u(j, j) = std::cos(0.5 * angle);
    u(i, j) = off * std::exp(cplx(0.0, -phase));
    u(j, i) = off * std::exp(cplx(0.0, phase));
}

}  // namespace detail

/// Textbook target unitary of a gate in the |QR> ordering (00, 01, 10, 11).
inline mat4 ideal_unitary(const gate_spec &g) {
    detail::check_gate(g);
    mat4 u = mat4::identity();
    switch (g.kind) {
        case gate_kind::rot_q:
            // U_Q (x) 1: acts on the (|00>,|10>) and (|01>,|11>) pairs.
            detail::put_rotation_block(u, 0, 2, g.angle, g.phase);
            detail::put_rotation_block(u, 1, 3, g.angle, g.phase);
            return u;
        case gate_kind::rot_r:
            // 1 (x) U_R: acts on the (|00>,|01>) and (|10>,|11>) pairs.
            detail::put_rotation_block(u, 0, 1, g.angle, g.phase);
            detail::put_rotation_block(u, 2, 3, g.angle, g.phase);
            return u;
        case gate_kind::cnot_q:
            u(2, 2) = 0.0;
            u(3, 3) = 0.0;
            u(2, 3) = 1.0;
            u(3, 2) = 1.0;
            return u;
        case gate_kind::cnot_r:
            u(1, 1) = 0.0;
            u(3, 3) = 0.0;
            u(1, 3) = 1.0;
            u(3, 1) = 1.0;
            return u;
    }
    throw contract_error("unknown gate kind");
}

/// Phase-gauged distance-free fidelity between an achieved unitary V and the
/// ideal U: max over diagonal gauges D of |tr(D V^dag U)| / 4. The maximum
/// has the closed form sum_k |(V^dag U)_kk| / 4, since each diagonal phase
/// can align its own term independently (this also absorbs the global phase).
inline double gauge_fidelity(const mat4 &ideal, const mat4 &achieved) {
    const mat4 m = adjoint(achieved) * ideal;
    double s = 0.0;
    for (int k = 0; k < 4; ++k) s += std::abs(m(k, k));
    return s / 4.0;
}

/// Population truth table: row i holds the populations of V|i> over the four
/// computational basis states.
using truth_table = std::array<std::array<double, 4>, 4>;

inline truth_table population_truth_table(const mat4 &v) {
    truth_table t{};
    for (int in = 0; in < 4; ++in)
        for (int out = 0; out < 4; ++out)
            t[static_cast<size_t>(in)][static_cast<size_t>(out)] = std::norm(v(out, in));
    return t;
}

struct gate_score {
    double fidelity = 0.0;
    truth_table table{};
};

/// Score an achieved propagator against an ideal unitary. The achieved matrix
/// must be unitary.
inline gate_score score(const mat4 &ideal, const mat4 &achieved) {
    if (unitarity_error(achieved) > 1e-6)
        throw contract_error("score: achieved matrix is not unitary");
    return {gauge_fidelity(ideal, achieved), population_truth_table(achieved)};
}

/// Compile failure carrying the selectivity warnings that triggered it.
struct compile_error : error {
    compile_error(const std::string &what, std::vector<selectivity_warning> w)
        : error(what), warnings(std::move(w)) {}
    std::vector<selectivity_warning> warnings;
};

/// A gate lowered to pulses, with its target unitary and RWA scoring.
struct compiled_gate {
    gate_spec spec;
    pulse_schedule schedule;   ///< exactly one tone group
    mat4 ideal;                ///< target unitary, computational basis
    propagator achieved;       ///< RWA propagator of the schedule
    double fidelity = 0.0;     ///< phase-gauged fidelity of achieved vs ideal
    truth_table table{};       ///< populations of achieved on basis inputs
};

/// Lower one gate to a single tone group.
///
/// Rotations use the two lines that flip their virtual spin, with per-line
/// amplitudes omega1 = rate/moment so both blocks turn by the same angle in
/// the same time; rate = rabi_budget * min(moment) keeps the strongest
/// physical amplitude at rabi_budget. CNOTs use one pi tone. Negative angles
/// compile as positive rotations about the opposite axis. The group must pass
/// the selectivity check or compilation fails.
inline compiled_gate compile_gate(const gate_spec &g, const eigensystem &eg,
                                  const line_list &lines, double rabi_budget) {
    detail::check_gate(g);
    if (!(rabi_budget > 0.0) || !std::isfinite(rabi_budget))
        throw invalid_parameter_error("rabi_budget must be > 0");

    double angle = std::numbers::pi;
    double phase = 0.0;
    std::array<std::array<int, 2>, 2> pairs{};
    size_t n_tones = 0;
    switch (g.kind) {
        case gate_kind::rot_q:
            pairs = {{{1, 3}, {2, 4}}};
            n_tones = 2;
            angle = g.angle;
            phase = g.phase;
            break;
        case gate_kind::rot_r:
            pairs = {{{1, 2}, {3, 4}}};
            n_tones = 2;
            angle = g.angle;
            phase = g.phase;
            break;
        case gate_kind::cnot_q:
            pairs = {{{3, 4}, {0, 0}}};
            n_tones = 1;
            break;
        case gate_kind::cnot_r:
            pairs = {{{2, 4}, {0, 0}}};
            n_tones = 1;
            break;
    }
    if (angle < 0.0) {
        angle = -angle;
        phase = phase < std::numbers::pi ? phase + std::numbers::pi
                                         : phase - std::numbers::pi;
    }

    double rate = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < n_tones; ++k) {
        const transition &line = lines.line(pairs[k][0], pairs[k][1]);
        // Moments are dimensionless and O(1); anything this small is a dark
        // line (delta = 0 singlet) that no finite pulse can drive usefully.
        if (line.moment <= 1e-9)
            throw compile_error("gate drives a dark line (" + std::to_string(line.upper) +
                                    "," + std::to_string(line.lower) +
                                    " has vanishing transition moment)",
                                {});
        rate = std::min(rate, line.moment);
    }
    rate *= rabi_budget;

    tone_group group;
    for (size_t k = 0; k < n_tones; ++k) {
        const transition &line = lines.line(pairs[k][0], pairs[k][1]);
        pulse p;
        p.carrier = line.frequency;
        p.phase = phase;
        p.amplitude = rate / line.moment;
        p.duration = angle / rate;
        p.target = {line.upper, line.lower};
        group.push_back(p);
    }

    std::vector<selectivity_warning> warnings = selectivity_check(group, eg, lines);
    if (!warnings.empty()) {
        const std::string what = "gate fails the selectivity check: " + warnings[0].message();
        throw compile_error(what, std::move(warnings));
    }

    compiled_gate out;
    out.spec = g;
    out.schedule.groups.push_back(std::move(group));
    out.ideal = ideal_unitary(g);
    out.achieved = rwa_propagator(out.schedule.groups.front(), eg, lines);
    const gate_score sc = score(out.ideal, out.achieved.matrix);
    out.fidelity = sc.fidelity;
    out.table = sc.table;
    return out;
}

}  // namespace vspin
