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

#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "vspin/pulse.hpp"
#include "vspin/spectrum.hpp"

namespace vspin {

/// A 4x4 unitary evolution operator expressed in the eigenbasis (psi1..psi4,
/// which is also the computational basis ordering |00>,|01>,|10>,|11>).
/// Lab-frame results are reported in the rotating frame of the static
/// Hamiltonian at t = duration, so they compare directly with the RWA path.
struct propagator {
    mat4 matrix = mat4::identity();
};

/// Warn when a tone's Rabi rate is not small against its detuning from every
/// non-target line that shares a level; past this ratio the off-resonant
/// excitation probability ~(rate/detuning)^2 exceeds ~2.5e-3.
inline constexpr double selectivity_threshold = 1.0 / 20.0;

struct selectivity_warning {
    int tone_index = 0;                 ///< position of the tone in its group
    std::array<int, 2> target{0, 0};    ///< driven line
    std::array<int, 2> nearest{0, 0};   ///< closest level-sharing line
    double rabi_rate = 0.0;             ///< moment * amplitude (rad/s)
    double detuning = 0.0;              ///< |carrier - nearest line frequency| (rad/s)
    double ratio = 0.0;                 ///< rabi_rate / detuning

    std::string message() const {
        return "tone " + std::to_string(tone_index) + " on line (" +
               std::to_string(target[0]) + "," + std::to_string(target[1]) +
               "): Rabi rate " + std::to_string(rabi_rate) + " vs detuning " +
               std::to_string(detuning) + " to line (" + std::to_string(nearest[0]) + "," +
               std::to_string(nearest[1]) + ") exceeds 1/20";
    }
};

namespace detail {

/// Line whose frequency lies within 1e-6 * theta of the carrier. Exactly one
/// must match.
inline const transition &resonant_line(const pulse &p, const eigensystem &eg,
                                       const line_list &lines) {
    const double window = 1e-6 * eg.theta;
    const transition *hit = nullptr;
    for (const transition &t : lines.lines) {
        if (std::abs(p.carrier - t.frequency) <= window) {
            if (hit != nullptr)
                throw no_matching_line_error("carrier matches more than one allowed line");
            hit = &t;
        }
    }
    if (hit == nullptr)
        throw no_matching_line_error("carrier is not resonant with any allowed line");
    return *hit;
}

}  // namespace detail

/// Tones in a group paired with their resolved lines.
struct resolved_tone {
    const pulse *tone = nullptr;
    const transition *line = nullptr;
};

inline std::vector<resolved_tone> resolve_group(const tone_group &group, const eigensystem &eg,
                                                const line_list &lines) {
    detail::check_group(group);
    std::vector<resolved_tone> out;
    out.reserve(group.size());
    for (const pulse &p : group) out.push_back({&p, &detail::resonant_line(p, eg, lines)});
    if (out.size() == 2) {
        const auto &a = *out[0].line;
        const auto &b = *out[1].line;
        if (a.upper == b.upper || a.upper == b.lower || a.lower == b.upper ||
            a.lower == b.lower)
            throw conflict_error("simultaneous tones target lines that share a level");
    }
    return out;
}

/// Rotating-wave propagator of one tone group. Each resonant tone rotates its
/// two-level subspace by
///
///   exp(-i (Theta/2) (cos(phase) sx + sin(phase) sy)),  Theta = moment * omega1 * t,
///
/// in the (upper, lower) block ordering; untargeted levels are untouched.
inline propagator rwa_propagator(const tone_group &group, const eigensystem &eg,
                                 const line_list &lines) {
    propagator out;
    for (const resolved_tone &rt : resolve_group(group, eg, lines)) {
        const pulse &p = *rt.tone;
        const transition &line = *rt.line;
        const int i = line.upper - 1;
        const int j = line.lower - 1;
        const double angle = line.moment * p.amplitude * p.duration;
        const cplx off = cplx(0.0, -1.0) * std::sin(0.5 * angle);
        out.matrix(i, i) = std::cos(0.5 * angle);
        out.matrix(j, j) = std::cos(0.5 * angle);
        out.matrix(i, j) = off * std::exp(cplx(0.0, -p.phase));
        out.matrix(j, i) = off * std::exp(cplx(0.0, p.phase));
    }
    return out;
}

/// Ordered product of the group propagators (first group acts first).
inline propagator rwa_schedule_propagator(const pulse_schedule &sched, const eigensystem &eg,
                                          const line_list &lines) {
    propagator out;
    for (const tone_group &g : sched.groups)
        out.matrix = rwa_propagator(g, eg, lines).matrix * out.matrix;
    return out;
}

struct lab_frame_options {
    int steps_per_period = 200;       ///< integration steps per carrier period (>= 20)
    long long max_steps = 200000000;  ///< step budget before resource-limit error
};

/// Exact (non-RWA) propagator of one tone group: integrates
///
///   dU/dt = -i (H0 + 2 sum_k omega1_k cos(carrier_k t + phase_k) (Ix+Sx)) U
///
/// in the lab frame with fixed-step midpoint exponentials (the linearly
/// polarized drive keeps its counter-rotating half). The result is rotated to
/// the eigenbasis and into the rotating frame of H0 at t = duration, which is
/// the frame the RWA propagator lives in.
inline propagator lab_frame_propagate(const tone_group &group, const eigensystem &eg,
                                      const spin_system_params &prm,
                                      const lab_frame_options &opt = {}) {
    detail::check_group(group);
    if (opt.steps_per_period < 20)
        throw invalid_parameter_error("steps_per_period must be >= 20");

    const double duration = group.front().duration;
    propagator out;
    if (duration == 0.0) return out;

    double max_carrier = 0.0;
    for (const pulse &p : group) {
        if (!(p.carrier > 0.0))
            throw invalid_parameter_error("lab-frame integration needs positive carriers");
        max_carrier = std::max(max_carrier, p.carrier);
    }

    const double base_dt = (2.0 * std::numbers::pi / max_carrier) / opt.steps_per_period;
    const double steps = std::ceil(duration / base_dt);
    if (steps > static_cast<double>(opt.max_steps))
        throw resource_limit_error("lab-frame step budget exceeded: needs " +
                                   std::to_string(steps) + " steps");
    const long long n = static_cast<long long>(steps);
    const double dt = duration / static_cast<double>(n);

    const mat4 h0 = build_hamiltonian(prm);
    const spin_operators &op = spin_ops();
    const mat4 x = op.ix + op.sx;

    mat4 u = mat4::identity();
    for (long long k = 0; k < n; ++k) {
        const double t = (static_cast<double>(k) + 0.5) * dt;
        double f = 0.0;
        for (const pulse &p : group)
            f += 2.0 * p.amplitude * std::cos(p.carrier * t + p.phase);
        const mat4 gen = cplx(0.0, -dt) * (h0 + f * x);
        u = expm(gen) * u;
    }

    // Rotate to the eigenbasis, then peel off the free evolution phases.
    mat4 u_eigen = adjoint(eg.states) * u * eg.states;
    for (int i = 0; i < 4; ++i) {
        const cplx ph = std::exp(cplx(0.0, eg.energies[static_cast<size_t>(i)] * duration));
        for (int j = 0; j < 4; ++j) u_eigen(i, j) = ph * u_eigen(i, j);
    }

    if (unitarity_error(u_eigen) > 1e-8)
        throw contract_error("lab-frame integration drifted from unitarity");
    out.matrix = u_eigen;
    return out;
}

/// For every tone, compare its effective Rabi rate with the smallest detuning
/// to any non-target line sharing a level; warn at ratio >= 1/20 (inclusive).
inline std::vector<selectivity_warning> selectivity_check(const tone_group &group,
                                                          const eigensystem &eg,
                                                          const line_list &lines) {
    std::vector<selectivity_warning> warnings;
    const std::vector<resolved_tone> resolved = resolve_group(group, eg, lines);
    for (size_t idx = 0; idx < resolved.size(); ++idx) {
        const pulse &p = *resolved[idx].tone;
        const transition &target = *resolved[idx].line;

        selectivity_warning w;
        w.tone_index = static_cast<int>(idx);
        w.target = {target.upper, target.lower};
        w.rabi_rate = target.moment * p.amplitude;
        w.detuning = std::numeric_limits<double>::infinity();
        for (const transition &t : lines.lines) {
            if (t.upper == target.upper && t.lower == target.lower) continue;
            const bool shares = t.upper == target.upper || t.upper == target.lower ||
                                t.lower == target.upper || t.lower == target.lower;
            if (!shares) continue;
            const double det = std::abs(p.carrier - t.frequency);
            if (det < w.detuning) {
                w.detuning = det;
                w.nearest = {t.upper, t.lower};
            }
        }
        w.ratio = w.detuning > 0.0 ? w.rabi_rate / w.detuning
                                   : std::numeric_limits<double>::infinity();
        if (w.rabi_rate == 0.0) w.ratio = 0.0;
        if (w.ratio >= selectivity_threshold) warnings.push_back(w);
    }
    return warnings;
}

}  // namespace vspin
