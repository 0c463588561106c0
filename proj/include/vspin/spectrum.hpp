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

#include <algorithm>
#include <limits>

#include "vspin/spin_system.hpp"

namespace vspin {

// The four allowed lines of the pair, driven through Ix+Sx:
//
//   eps12 = omega0 + J/2 - theta/2      intensity 1 + sin(phi)
//   eps13 = omega0 + J/2 + theta/2      intensity 1 - sin(phi)
//   eps24 = omega0 - J/2 + theta/2      intensity 1 + sin(phi)
//   eps34 = omega0 - J/2 - theta/2      intensity 1 - sin(phi)
//
// The 1<->4 and 2<->3 matrix elements vanish exactly. Intensities are
// normalized so every line has intensity 1 in the phi = 0 limit, i.e.
// moment = 2|<psi_upper|Ix+Sx|psi_lower>| and intensity = moment^2.

/// One allowed line, identified by its eigenstate label pair (never by its
/// frequency order, which can permute at extreme parameters).
struct transition {
    int upper = 0;           ///< label of the higher-energy level
    int lower = 0;           ///< label of the lower-energy level
    double frequency = 0.0;  ///< eps_upper - eps_lower (rad/s)
    double moment = 0.0;     ///< 2|<psi_upper|Ix+Sx|psi_lower>|
    double intensity = 0.0;  ///< moment^2, relative units
};

/// The four allowed lines sorted by frequency ascending (ties broken by
/// label pair), plus the smallest pairwise frequency spacing.
struct line_list {
    std::array<transition, 4> lines{};
    double min_gap = 0.0;

    /// Line with the given label pair, in either order.
    const transition &line(int a, int b) const {
        for (const transition &t : lines)
            if ((t.upper == a && t.lower == b) || (t.upper == b && t.lower == a)) return t;
        throw invalid_parameter_error("no allowed transition with the given labels");
    }
};

namespace detail {

inline double drive_moment(const eigensystem &eg, int a, int b) {
    const spin_operators &op = spin_ops();
    const mat4 x = op.ix + op.sx;
    return 2.0 * std::abs(inner(column(eg.states, a - 1), x * column(eg.states, b - 1)));
}

}  // namespace detail

/// Compute the four allowed lines. Frequencies are evaluated both from the
/// closed forms above and as eigenvalue differences; the two must agree to
/// 1e-10 (relative) or the call fails. Moments come from the Ix+Sx matrix
/// elements, not from the closed-form intensities.
inline line_list build_line_list(const eigensystem &eg, const spin_system_params &prm) {
    constexpr std::array<std::array<int, 2>, 4> pairs = {{{1, 2}, {1, 3}, {2, 4}, {3, 4}}};
    const std::array<double, 4> closed = {
        prm.omega0 + 0.5 * prm.j - 0.5 * eg.theta,
        prm.omega0 + 0.5 * prm.j + 0.5 * eg.theta,
        prm.omega0 - 0.5 * prm.j + 0.5 * eg.theta,
        prm.omega0 - 0.5 * prm.j - 0.5 * eg.theta,
    };

    double scale = 0.0;
    for (double e : eg.energies) scale = std::max(scale, std::abs(e));
    scale = std::max(scale, 1e-300);

    line_list out;
    for (size_t k = 0; k < 4; ++k) {
        const int a = pairs[k][0];
        const int b = pairs[k][1];
        transition t;
        t.upper = a;
        t.lower = b;
        t.frequency = eg.energies[static_cast<size_t>(a - 1)] -
                      eg.energies[static_cast<size_t>(b - 1)];
        if (std::abs(t.frequency - closed[k]) > 1e-10 * scale)
            throw contract_error("line frequency cross-check failed");
        t.moment = detail::drive_moment(eg, a, b);
        t.intensity = t.moment * t.moment;
        out.lines[k] = t;
    }

    std::sort(out.lines.begin(), out.lines.end(), [](const transition &x, const transition &y) {
        if (x.frequency != y.frequency) return x.frequency < y.frequency;
        if (x.upper != y.upper) return x.upper < y.upper;
        return x.lower < y.lower;
    });

    out.min_gap = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            out.min_gap = std::min(out.min_gap,
                                   std::abs(out.lines[i].frequency - out.lines[j].frequency));
    return out;
}

/// Residual moments of the two forbidden pairs; both should vanish.
struct forbidden_report {
    double moment_14 = 0.0;
    double moment_23 = 0.0;
    bool pass = false;
};

inline forbidden_report forbidden_check(const eigensystem &eg) {
    forbidden_report r;
    r.moment_14 = 0.5 * detail::drive_moment(eg, 1, 4);
    r.moment_23 = 0.5 * detail::drive_moment(eg, 2, 3);
    r.pass = r.moment_14 <= 1e-12 && r.moment_23 <= 1e-12;
    return r;
}

/// min_gap / rabi: how many Rabi linewidths fit between the closest lines.
inline double resolvability(const line_list &lines, double rabi) {
    if (!(rabi > 0.0)) throw invalid_parameter_error("rabi must be > 0");
    return lines.min_gap / rabi;
}

}  // namespace vspin
