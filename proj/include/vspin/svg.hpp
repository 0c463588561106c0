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

#include "vspin/json_io.hpp"
#include "vspin/spectrum.hpp"
#include "vspin/version.hpp"
#include "vspin/virtual_basis.hpp"

namespace vspin {

// Energy-level diagram: four horizontal level lines at heights proportional
// to the energies, one arrow per allowed transition, labels psi_i and |QR>.
// Elements carry machine-readable data-* attributes (class="level" with
// data-energy, class="transition" with data-upper/lower/frequency/intensity)
// so tests and downstream tools can parse the drawing. Output is
// deterministic except for the version comment.

inline std::string level_diagram_svg(const eigensystem &eg, const line_list &lines) {
    constexpr double width = 720.0;
    constexpr double height = 480.0;
    constexpr double top = 50.0;
    constexpr double bottom = 430.0;
    constexpr double level_x0 = 80.0;
    constexpr double level_x1 = 330.0;

    double emin = eg.energies[0];
    double emax = eg.energies[0];
    for (double e : eg.energies) {
        emin = std::min(emin, e);
        emax = std::max(emax, e);
    }
    double span = emax - emin;
    if (span <= 0.0) span = 1.0;
    const auto y_of = [&](double e) { return top + (emax - e) / span * (bottom - top); };

    std::string s;
    const auto num = [](double v) { return format_number(v); };
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<!-- vspin " + std::string(version_string) + " level diagram -->\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    s += "  <defs>\n"
         "    <marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"4\" refY=\"4\" "
         "orient=\"auto\">\n"
         "      <path d=\"M0,0 L8,4 L0,8 z\"/>\n"
         "    </marker>\n"
         "  </defs>\n";

    for (int i = 0; i < 4; ++i) {
        const double e = eg.energies[static_cast<size_t>(i)];
        const double y = y_of(e);
        s += "  <line class=\"level\" data-label=\"" + std::to_string(i + 1) +
             "\" data-energy=\"" + num(e) + "\" x1=\"" + num(level_x0) + "\" y1=\"" + num(y) +
             "\" x2=\"" + num(level_x1) + "\" y2=\"" + num(y) +
             "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        const qubit_label lbl = label_for_eigenindex(i + 1);
        s += "  <text class=\"level-label\" x=\"" + num(level_x0 - 70.0) + "\" y=\"" +
             num(y + 5.0) + "\" font-size=\"15\">ψ" + std::to_string(i + 1) + " |" +
             to_string(lbl) + "⟩</text>\n";
        s += "  <text class=\"level-energy\" x=\"" + num(level_x1 + 8.0) + "\" y=\"" +
             num(y + 5.0) + "\" font-size=\"11\">" + num(e) + "</text>\n";
    }

    double x = 460.0;
    for (const transition &t : lines.lines) {
        const double y_lo = y_of(eg.energies[static_cast<size_t>(t.lower - 1)]);
        const double y_up = y_of(eg.energies[static_cast<size_t>(t.upper - 1)]);
        s += "  <line class=\"transition\" data-upper=\"" + std::to_string(t.upper) +
             "\" data-lower=\"" + std::to_string(t.lower) + "\" data-frequency=\"" +
             num(t.frequency) + "\" data-intensity=\"" + num(t.intensity) + "\" x1=\"" +
             num(x) + "\" y1=\"" + num(y_lo) + "\" x2=\"" + num(x) + "\" y2=\"" + num(y_up) +
             "\" stroke=\"black\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
        s += "  <text class=\"transition-label\" x=\"" + num(x + 6.0) + "\" y=\"" +
             num(0.5 * (y_lo + y_up)) + "\" font-size=\"11\">ε" +
             std::to_string(t.upper) + std::to_string(t.lower) + "=" + num(t.frequency) +
             " I=" + num(t.intensity) + "</text>\n";
        x += 64.0;
    }

    s += "</svg>\n";
    return s;
}

}  // namespace vspin
