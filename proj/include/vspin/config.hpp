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
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>

#include "vspin/spin_system.hpp"

namespace vspin {

// Flat `key = value` parameter files (UTF-8, '#' comments). Two mutually
// exclusive styles:
//
//   gamma-style:  gamma_i, gamma_s, h0, j
//   larmor-style: omega0, delta, j
//
// Every frequency key also has a `*_hz` variant quoted in Hz, which is
// multiplied by 2*pi on load (gamma_i_hz, gamma_s_hz, j_hz, omega0_hz,
// delta_hz; h0 is a field in tesla and has no variant). Giving a key both
// ways is an error.

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

inline double parse_config_number(std::string_view text, const std::string &key) {
    const std::string buf(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{} || ptr != buf.data() + buf.size())
        throw config_error("invalid numeric value for key `" + key + "`: " + buf, key);
    return v;
}

}  // namespace detail

inline spin_system_params parse_config(std::istream &in) {
    std::map<std::string, double> keys;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view sv = detail::trim(line);
        if (sv.empty() || sv.front() == '#') continue;
        const size_t eq = sv.find('=');
        if (eq == std::string_view::npos)
            throw config_error("line " + std::to_string(line_no) +
                               ": expected `key = value`, got: " + std::string(sv));
        const std::string key{detail::trim(sv.substr(0, eq))};
        const std::string_view value = detail::trim(sv.substr(eq + 1));
        if (key.empty())
            throw config_error("line " + std::to_string(line_no) + ": empty key");
        if (keys.contains(key))
            throw config_error("duplicate key `" + key + "`", key);
        keys[key] = detail::parse_config_number(value, key);
    }

    // Fold the *_hz variants into their rad/s keys.
    constexpr std::array<const char *, 5> freq_keys = {"gamma_i", "gamma_s", "j", "omega0",
                                                       "delta"};
    for (const char *base : freq_keys) {
        const std::string hz = std::string(base) + "_hz";
        const auto it = keys.find(hz);
        if (it == keys.end()) continue;
        if (keys.contains(base))
            throw config_error("keys `" + std::string(base) + "` and `" + hz +
                                   "` are mutually exclusive",
                               hz);
        keys[base] = 2.0 * std::numbers::pi * it->second;
        keys.erase(hz);
    }

    const bool has_gamma = keys.contains("gamma_i") || keys.contains("gamma_s") ||
                           keys.contains("h0");
    const bool has_larmor = keys.contains("omega0") || keys.contains("delta");
    if (has_gamma && has_larmor)
        throw config_error("gamma-style and larmor-style keys are mutually exclusive");
    if (!has_gamma && !has_larmor)
        throw config_error("missing system keys: give gamma_i/gamma_s/h0/j or omega0/delta/j");

    const auto take = [&keys](const char *key) {
        const auto it = keys.find(key);
        if (it == keys.end()) throw config_error("missing key `" + std::string(key) + "`", key);
        const double v = it->second;
        keys.erase(it);
        return v;
    };

    spin_system_params prm;
    if (has_gamma) {
        const double gi = take("gamma_i");
        const double gs = take("gamma_s");
        const double h0 = take("h0");
        const double j = take("j");
        prm = params_from_gammas(gi, gs, h0, j);
    } else {
        const double omega0 = take("omega0");
        const double delta = take("delta");
        const double j = take("j");
        prm = params_from_larmor(omega0, delta, j);
    }
    if (!keys.empty())
        throw config_error("unknown key `" + keys.begin()->first + "`", keys.begin()->first);
    return prm;
}

inline spin_system_params parse_config_text(const std::string &text) {
    std::istringstream in(text);
    return parse_config(in);
}

}  // namespace vspin
