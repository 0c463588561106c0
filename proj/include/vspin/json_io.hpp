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
#include <string>
#include <vector>

#include "json.hpp"
#include "vspin/gate.hpp"

namespace vspin {

/// Decimal form with 17 significant digits, locale independent. 17 digits
/// round-trip any double bit-exactly, and the same double always formats to
/// the same bytes, so repeated runs emit identical files.
inline std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

/// Minimal streaming JSON writer: insertion-ordered keys, numbers through
/// format_number, two-space indentation, '\n' line ends. Output is a stable
/// byte-for-byte function of the values written.
class json_writer {
  public:
    std::string take() && { return std::move(buf_); }
    const std::string &text() const { return buf_; }

    json_writer &begin_object() { return open('{'); }
    json_writer &end_object() { return close('}'); }
    json_writer &begin_array() { return open('['); }
    json_writer &end_array() { return close(']'); }

    json_writer &key(std::string_view name) {
        comma_indent();
        append_string(name);
        buf_ += ": ";
        pending_value_ = true;
        return *this;
    }

    json_writer &value(double v) { return raw(format_number(v)); }
    json_writer &value(int v) { return raw(std::to_string(v)); }
    json_writer &value(long long v) { return raw(std::to_string(v)); }
    json_writer &value(bool v) { return raw(v ? "true" : "false"); }
    json_writer &value(std::string_view s) {
        comma_indent();
        append_string(s);
        after_value();
        return *this;
    }
    json_writer &value(const char *s) { return value(std::string_view(s)); }

    /// A pre-rendered JSON fragment emitted as one value.
    json_writer &value_raw(std::string_view fragment) { return raw(fragment); }

    /// Complex numbers render inline as "[re, im]".
    json_writer &value(const cplx &c) {
        return raw("[" + format_number(std::real(c)) + ", " + format_number(std::imag(c)) +
                   "]");
    }

    /// Matrices render as an array of inline rows of [re, im] pairs.
    json_writer &value(const mat4 &m) {
        begin_array();
        for (int i = 0; i < 4; ++i) {
            std::string row = "[";
            for (int j = 0; j < 4; ++j) {
                if (j != 0) row += ", ";
                row += "[" + format_number(std::real(m(i, j))) + ", " +
                       format_number(std::imag(m(i, j))) + "]";
            }
            raw(row + "]");
        }
        return end_array();
    }

  private:
    json_writer &raw(std::string_view text) {
        comma_indent();
        buf_ += text;
        after_value();
        return *this;
    }

    json_writer &open(char c) {
        comma_indent();
        buf_ += c;
        need_comma_ = false;
        pending_value_ = false;
        ++depth_;
        fresh_container_ = true;
        return *this;
    }

    json_writer &close(char c) {
        --depth_;
        if (!fresh_container_) {
            buf_ += '\n';
            indent();
        }
        buf_ += c;
        after_value();
        return *this;
    }

    void comma_indent() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (need_comma_) buf_ += ',';
        if (depth_ > 0) {
            buf_ += '\n';
            indent();
        }
        fresh_container_ = false;
    }

    void after_value() {
        need_comma_ = true;
        pending_value_ = false;
        fresh_container_ = false;
    }

    void indent() { buf_.append(static_cast<size_t>(2 * depth_), ' '); }

    void append_string(std::string_view s) {
        buf_ += '"';
        for (char c : s) {
            switch (c) {
                case '"': buf_ += "\\\""; break;
                case '\\': buf_ += "\\\\"; break;
                case '\n': buf_ += "\\n"; break;
                case '\t': buf_ += "\\t"; break;
                default: buf_ += c;
            }
        }
        buf_ += '"';
    }

    std::string buf_;
    int depth_ = 0;
    bool need_comma_ = false;
    bool pending_value_ = false;
    bool fresh_container_ = true;
};

// ---------------------------------------------------------------------------
// State vectors: {"basis": "product"|"eigen", "amplitudes": [[re, im] x4]}
// ---------------------------------------------------------------------------

inline void write_state(json_writer &w, const state_vector &s) {
    w.begin_object();
    w.key("basis").value(s.basis == basis_tag::product ? "product" : "eigen");
    w.key("amplitudes").begin_array();
    for (const cplx &a : s.amplitudes) w.value(a);
    w.end_array();
    w.end_object();
}

inline std::string state_to_json(const state_vector &s) {
    json_writer w;
    write_state(w, s);
    return std::move(w).take();
}

inline state_vector state_from_json(const std::string &text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    state_vector s;
    const std::string basis = j.at("basis").get<std::string>();
    if (basis == "product") s.basis = basis_tag::product;
    else if (basis == "eigen") s.basis = basis_tag::eigen;
    else throw invalid_parameter_error("state basis must be \"product\" or \"eigen\"");
    const auto &amps = j.at("amplitudes");
    if (amps.size() != 4) throw invalid_parameter_error("state needs 4 amplitudes");
    for (size_t i = 0; i < 4; ++i)
        s.amplitudes[i] = cplx(amps[i].at(0).get<double>(), amps[i].at(1).get<double>());
    return s;
}

// ---------------------------------------------------------------------------
// Pulse schedules: array of groups, each group an array of tone objects.
// ---------------------------------------------------------------------------

inline void write_schedule(json_writer &w, const pulse_schedule &sched) {
    w.begin_array();
    for (const tone_group &g : sched.groups) {
        w.begin_array();
        for (const pulse &p : g) {
            w.begin_object();
            w.key("carrier_rad_s").value(p.carrier);
            w.key("phase_rad").value(p.phase);
            w.key("amplitude_rad_s").value(p.amplitude);
            w.key("duration_s").value(p.duration);
            w.key("target").begin_array().value(p.target[0]).value(p.target[1]).end_array();
            w.end_object();
        }
        w.end_array();
    }
    w.end_array();
}

inline std::string schedule_to_json(const pulse_schedule &sched) {
    json_writer w;
    write_schedule(w, sched);
    return std::move(w).take();
}

inline pulse_schedule schedule_from_json(const std::string &text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    pulse_schedule sched;
    for (const auto &jg : j) {
        tone_group g;
        for (const auto &jp : jg) {
            pulse p;
            p.carrier = jp.at("carrier_rad_s").get<double>();
            p.phase = jp.at("phase_rad").get<double>();
            p.amplitude = jp.at("amplitude_rad_s").get<double>();
            p.duration = jp.at("duration_s").get<double>();
            p.target = {jp.at("target").at(0).get<int>(), jp.at("target").at(1).get<int>()};
            g.push_back(p);
        }
        sched.groups.push_back(std::move(g));
    }
    return sched;
}

// ---------------------------------------------------------------------------
// Line lists.
// ---------------------------------------------------------------------------

inline void write_line_list(json_writer &w, const line_list &lines) {
    w.begin_object();
    w.key("transitions").begin_array();
    for (const transition &t : lines.lines) {
        w.begin_object();
        w.key("upper").value(t.upper);
        w.key("lower").value(t.lower);
        w.key("frequency_rad_s").value(t.frequency);
        w.key("intensity").value(t.intensity);
        w.end_object();
    }
    w.end_array();
    w.key("min_gap_rad_s").value(lines.min_gap);
    w.end_object();
}

inline std::string line_list_to_json(const line_list &lines) {
    json_writer w;
    write_line_list(w, lines);
    return std::move(w).take();
}

/// CSV form: fixed header then the four lines, frequency ascending.
inline std::string line_list_to_csv(const line_list &lines) {
    std::string out = "upper,lower,frequency_rad_s,intensity\n";
    for (const transition &t : lines.lines) {
        out += std::to_string(t.upper) + "," + std::to_string(t.lower) + "," +
               format_number(t.frequency) + "," + format_number(t.intensity) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Compiled gates: schedule + ideal matrix + fidelity + truth table.
// ---------------------------------------------------------------------------

inline void write_truth_table(json_writer &w, const truth_table &t) {
    w.begin_array();
    for (const auto &row : t) {
        std::string line = "[";
        for (size_t j = 0; j < 4; ++j) {
            if (j != 0) line += ", ";
            line += format_number(row[j]);
        }
        w.value_raw(line + "]");
    }
    w.end_array();
}

inline void write_compiled_gate(json_writer &w, const compiled_gate &g) {
    w.begin_object();
    w.key("kind").value(to_string(g.spec.kind));
    if (g.spec.kind == gate_kind::rot_q || g.spec.kind == gate_kind::rot_r) {
        w.key("angle_rad").value(g.spec.angle);
        w.key("axis_phase_rad").value(g.spec.phase);
    }
    w.key("schedule");
    write_schedule(w, g.schedule);
    w.key("ideal").value(g.ideal);
    w.key("fidelity").value(g.fidelity);
    w.key("truth_table");
    write_truth_table(w, g.table);
    w.end_object();
}

inline std::string compiled_gate_to_json(const compiled_gate &g) {
    json_writer w;
    write_compiled_gate(w, g);
    return std::move(w).take();
}

}  // namespace vspin
