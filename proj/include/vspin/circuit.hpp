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

#include <charconv>
#include <istream>
#include <optional>
#include <sstream>
#include <vector>

#include "vspin/gate.hpp"

namespace vspin {

// Line-oriented circuit files:
//
//   init <label|amplitudes>   # label 00/01/10/11, or 4 real / 8 re,im numbers
//   rotq <angle> <phase>
//   rotr <angle> <phase>
//   cnot_q
//   cnot_r
//   # comment
//
// Angles and phases accept pi-expressions: `pi`, `-pi/2`, `3pi/4`, `2pi`, or
// plain numeric literals in radians. The initial state is given in the
// computational basis and must be normalized (renormalized exactly on load).

enum class engine_kind { rwa, labframe };

struct circuit_options {
    engine_kind engine = engine_kind::rwa;
    std::optional<double> rabi_budget;  ///< default: min_gap / 100
    int steps_per_period = 200;
};

struct circuit_program {
    state_vector initial = basis_state({0, 0});  ///< eigen/computational basis
    std::vector<gate_spec> gates;
    circuit_options options;
};

namespace detail {

inline std::vector<std::string> split_words(const std::string &line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

/// `pi`, `2pi`, `pi/2`, `-3pi/4`, or a plain literal.
inline double parse_angle(const std::string &word, int line_no) {
    const auto fail = [&]() -> double {
        throw circuit_parse_error(
            "line " + std::to_string(line_no) + ": bad angle `" + word + "`", line_no);
    };
    const size_t pi_pos = word.find("pi");
    if (pi_pos == std::string::npos) {
        double v = 0.0;
        const auto [p, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
        if (ec != std::errc{} || p != word.data() + word.size()) return fail();
        return v;
    }
    double coeff = 1.0;
    std::string head = word.substr(0, pi_pos);
    if (head == "-") {
        coeff = -1.0;
    } else if (!head.empty()) {
        const auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), coeff);
        if (ec != std::errc{} || p != head.data() + head.size()) return fail();
    }
    double denom = 1.0;
    const std::string tail = word.substr(pi_pos + 2);
    if (!tail.empty()) {
        if (tail.front() != '/' || tail.size() < 2) return fail();
        const auto [p, ec] =
            std::from_chars(tail.data() + 1, tail.data() + tail.size(), denom);
        if (ec != std::errc{} || p != tail.data() + tail.size() || denom == 0.0) return fail();
    }
    return coeff * std::numbers::pi / denom;
}

inline state_vector parse_init(const std::vector<std::string> &words, int line_no) {
    state_vector s;
    s.basis = basis_tag::eigen;
    if (words.size() == 2 && words[1].size() == 2 &&
        (words[1][0] == '0' || words[1][0] == '1') &&
        (words[1][1] == '0' || words[1][1] == '1')) {
        return basis_state({words[1][0] - '0', words[1][1] - '0'});
    }
    std::vector<double> nums;
    for (size_t k = 1; k < words.size(); ++k)
        nums.push_back(parse_angle(words[k], line_no));
    if (nums.size() == 4) {
        for (size_t i = 0; i < 4; ++i) s.amplitudes[i] = nums[i];
    } else if (nums.size() == 8) {
        for (size_t i = 0; i < 4; ++i) s.amplitudes[i] = cplx(nums[2 * i], nums[2 * i + 1]);
    } else {
        throw circuit_parse_error("line " + std::to_string(line_no) +
                                      ": init needs a 2-bit label, 4 real amplitudes, or "
                                      "8 re/im numbers",
                                  line_no);
    }
    const double n = norm(s.amplitudes);
    if (std::abs(n - 1.0) > 1e-6)
        throw circuit_parse_error(
            "line " + std::to_string(line_no) + ": initial state is not normalized", line_no);
    for (cplx &a : s.amplitudes) a /= n;
    return s;
}

}  // namespace detail

inline circuit_program parse_circuit(std::istream &in) {
    circuit_program prog;
    bool saw_init = false;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        // Allow several statements per line, separated by ';'.
        std::string_view rest(raw);
        while (!rest.empty()) {
            const size_t semi = rest.find(';');
            std::string stmt{rest.substr(0, semi)};
            rest = semi == std::string_view::npos ? std::string_view{} : rest.substr(semi + 1);

            const size_t hash = stmt.find('#');
            if (hash != std::string::npos) {
                stmt.resize(hash);
                rest = {};
            }
            const std::vector<std::string> words = detail::split_words(stmt);
            if (words.empty()) continue;
            const std::string &op = words[0];
            if (op == "init") {
                if (saw_init)
                    throw circuit_parse_error(
                        "line " + std::to_string(line_no) + ": duplicate init", line_no);
                prog.initial = detail::parse_init(words, line_no);
                saw_init = true;
            } else if (op == "rotq" || op == "rotr") {
                if (words.size() != 3)
                    throw circuit_parse_error("line " + std::to_string(line_no) + ": " + op +
                                                  " needs <angle> <phase>",
                                              line_no);
                gate_spec g;
                g.kind = op == "rotq" ? gate_kind::rot_q : gate_kind::rot_r;
                g.angle = detail::parse_angle(words[1], line_no);
                // The axis phase is periodic; fold it into [0, 2pi).
                g.phase = std::fmod(detail::parse_angle(words[2], line_no),
                                    2.0 * std::numbers::pi);
                if (g.phase < 0.0) g.phase += 2.0 * std::numbers::pi;
                if (g.phase >= 2.0 * std::numbers::pi) g.phase = 0.0;
                prog.gates.push_back(g);
            } else if (op == "cnot_q" || op == "cnot_r") {
                if (words.size() != 1)
                    throw circuit_parse_error(
                        "line " + std::to_string(line_no) + ": " + op + " takes no arguments",
                        line_no);
                prog.gates.push_back(
                    {op == "cnot_q" ? gate_kind::cnot_q : gate_kind::cnot_r, 0.0, 0.0});
            } else {
                throw circuit_parse_error(
                    "line " + std::to_string(line_no) + ": unknown statement `" + op + "`",
                    line_no);
            }
        }
    }
    return prog;
}

inline circuit_program parse_circuit_text(const std::string &text) {
    std::istringstream in(text);
    return parse_circuit(in);
}

}  // namespace vspin
