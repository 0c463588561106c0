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
#include <vector>

#include "vspin/errors.hpp"

namespace vspin {

/// One rectangular resonant RF tone. The physical drive it contributes is
/// 2 * amplitude * cos(carrier*t + phase) * (Ix+Sx); on resonance with line
/// (a,b) this produces a two-level Rabi rate moment_ab * amplitude.
struct pulse {
    double carrier = 0.0;    ///< angular frequency (rad/s)
    double phase = 0.0;      ///< radians
    double amplitude = 0.0;  ///< drive strength omega1 (rad/s), >= 0
    double duration = 0.0;   ///< seconds, >= 0
    std::array<int, 2> target{0, 0};  ///< resonant level pair (upper, lower), bookkeeping
};

/// Tones applied simultaneously over one common interval (1 or 2 of them,
/// with distinct carriers and a shared duration).
using tone_group = std::vector<pulse>;

/// Ordered sequence of tone groups. A single gate always compiles to exactly
/// one group.
struct pulse_schedule {
    std::vector<tone_group> groups;
};

namespace detail {

inline void check_pulse(const pulse &p) {
    if (!(p.amplitude >= 0.0)) throw invalid_parameter_error("pulse amplitude must be >= 0");
    if (!(p.duration >= 0.0)) throw invalid_parameter_error("pulse duration must be >= 0");
    if (!std::isfinite(p.carrier) || !std::isfinite(p.phase) || !std::isfinite(p.amplitude) ||
        !std::isfinite(p.duration))
        throw invalid_parameter_error("pulse fields must be finite");
}

inline void check_group(const tone_group &g) {
    if (g.empty()) throw contract_error("tone group must contain at least one pulse");
    if (g.size() > 2) throw conflict_error("tone group holds more than two simultaneous tones");
    for (const pulse &p : g) check_pulse(p);
    if (g.size() == 2) {
        if (g[0].carrier == g[1].carrier)
            throw conflict_error("simultaneous tones must have distinct carriers");
        if (g[0].duration != g[1].duration)
            throw conflict_error("simultaneous tones must share one duration");
    }
}

}  // namespace detail

}  // namespace vspin
