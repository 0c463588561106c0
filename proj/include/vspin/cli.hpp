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

#include <fstream>
#include <iostream>
#include <optional>

#include "vspin/circuit.hpp"
#include "vspin/config.hpp"
#include "vspin/json_io.hpp"
#include "vspin/svg.hpp"
#include "vspin/validate.hpp"

namespace vspin {

// The `sim` commands as plain functions, so tests exercise them directly.
// Artifact bytes go to `--out` (or the stdout stream); diagnostics and
// informational lines go to the error stream. Exit codes are a stable
// contract:
//
//   0 ok, 2 input error, 3 I/O error, 4 compile/selectivity error,
//   5 validation failure.

inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_io_error = 3;
inline constexpr int exit_compile_error = 4;
inline constexpr int exit_validation_error = 5;

enum class output_format { csv, json };

namespace detail {

inline std::optional<spin_system_params> load_config(const std::string &path,
                                                     std::ostream &err) {
    std::ifstream in(path);
    if (!in) {
        err << "error: cannot read config file: " << path << "\n";
        return std::nullopt;
    }
    return parse_config(in);
}

/// Write `text` to `path`, or to `fallback` when path is empty.
inline bool emit(const std::string &text, const std::string &path, std::ostream &fallback,
                 std::ostream &err) {
    if (path.empty()) {
        fallback << text;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        err << "error: cannot write output file: " << path << "\n";
        return false;
    }
    out << text;
    out.close();
    if (!out) {
        err << "error: short write to output file: " << path << "\n";
        return false;
    }
    return true;
}

}  // namespace detail

/// `sim spectrum`: the four allowed lines as CSV or JSON, plus the minimum
/// line spacing on the diagnostic stream.
inline int cmd_spectrum(const std::string &config_path, output_format format,
                        const std::string &out_path, std::ostream &out = std::cout,
                        std::ostream &err = std::cerr) {
    try {
        const auto prm = detail::load_config(config_path, err);
        if (!prm) return exit_input_error;
        const eigensystem eg = analytic_eigensystem(*prm);
        const line_list lines = build_line_list(eg, *prm);
        const std::string text =
            format == output_format::csv ? line_list_to_csv(lines) : line_list_to_json(lines) + "\n";
        if (!detail::emit(text, out_path, out, err)) return exit_io_error;
        err << "min_gap_rad_s = " << format_number(lines.min_gap) << "\n";
        return exit_ok;
    } catch (const config_error &e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const invalid_parameter_error &e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

/// `sim levels`: SVG energy-level diagram with transition arrows.
inline int cmd_levels(const std::string &config_path, const std::string &out_path,
                      std::ostream &out = std::cout, std::ostream &err = std::cerr) {
    try {
        const auto prm = detail::load_config(config_path, err);
        if (!prm) return exit_input_error;
        const eigensystem eg = analytic_eigensystem(*prm);
        const line_list lines = build_line_list(eg, *prm);
        if (!detail::emit(level_diagram_svg(eg, lines), out_path, out, err))
            return exit_io_error;
        return exit_ok;
    } catch (const config_error &e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const invalid_parameter_error &e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

/// `sim run`: compile each gate, propagate the initial state with the chosen
/// engine, and write a JSON report (schema 1) with per-gate schedules,
/// fidelities, truth tables, and the final state and populations.
inline int cmd_run(const std::string &config_path, const std::string &circuit_path,
                   const std::string &out_path, const circuit_options &options = {},
                   std::ostream &out = std::cout, std::ostream &err = std::cerr) {
    spin_system_params prm;
    circuit_program prog;
    try {
        const auto loaded = detail::load_config(config_path, err);
        if (!loaded) return exit_input_error;
        prm = *loaded;
        std::ifstream circ(circuit_path);
        if (!circ) {
            err << "error: cannot read circuit file: " << circuit_path << "\n";
            return exit_input_error;
        }
        prog = parse_circuit(circ);
        prog.options = options;
    } catch (const config_error &e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const circuit_parse_error &e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }

    try {
        const eigensystem eg = analytic_eigensystem(prm);
        const line_list lines = build_line_list(eg, prm);
        const double budget = prog.options.rabi_budget.value_or(lines.min_gap / 100.0);

        json_writer w;
        w.begin_object();
        w.key("schema").value(1);
        w.key("engine").value(prog.options.engine == engine_kind::rwa ? "rwa" : "labframe");
        w.key("rabi_budget_rad_s").value(budget);
        if (prog.options.engine == engine_kind::labframe)
            w.key("steps_per_period").value(prog.options.steps_per_period);
        w.key("initial_state");
        write_state(w, prog.initial);

        state_vector state = prog.initial;
        w.key("gates").begin_array();
        for (size_t gi = 0; gi < prog.gates.size(); ++gi) {
            compiled_gate cg;
            try {
                cg = compile_gate(prog.gates[gi], eg, lines, budget);
            } catch (const compile_error &e) {
                err << "error: gate " << gi + 1 << " (" << to_string(prog.gates[gi].kind)
                    << "): " << e.what() << "\n";
                return exit_compile_error;
            }
            if (prog.options.engine == engine_kind::labframe) {
                lab_frame_options lf;
                lf.steps_per_period = prog.options.steps_per_period;
                cg.achieved = lab_frame_propagate(cg.schedule.groups.front(), eg, prm, lf);
                const gate_score sc = score(cg.ideal, cg.achieved.matrix);
                cg.fidelity = sc.fidelity;
                cg.table = sc.table;
            }
            state.amplitudes = cg.achieved.matrix * state.amplitudes;
            write_compiled_gate(w, cg);
        }
        w.end_array();

        w.key("final_state");
        write_state(w, state);
        const std::array<double, 4> pops = populations(state);
        w.key("final_populations").begin_object();
        for (int i = 1; i <= 4; ++i)
            w.key(to_string(label_for_eigenindex(i))).value(pops[static_cast<size_t>(i - 1)]);
        w.end_object();
        w.end_object();

        if (!detail::emit(std::move(w).take() + "\n", out_path, out, err))
            return exit_io_error;
        return exit_ok;
    } catch (const invalid_parameter_error &e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const error &e) {
        err << "error: " << e.what() << "\n";
        return exit_compile_error;
    }
}

/// `sim validate`: run the cross-check suite and print one line per check.
inline int cmd_validate(const std::string &config_path, std::ostream &out = std::cout,
                        std::ostream &err = std::cerr,
                        const std::function<void(eigensystem &)> &tamper = {}) {
    try {
        const auto prm = detail::load_config(config_path, err);
        if (!prm) return exit_input_error;
        const validation_report rep = run_validation(*prm, tamper);
        for (const std::string &note : rep.notes) out << "note: " << note << "\n";
        for (const validation_check &c : rep.checks) {
            out << (c.pass ? "PASS " : "FAIL ") << c.name
                << " residual=" << format_number(c.residual)
                << " tolerance=" << format_number(c.tolerance) << "\n";
        }
        out << (rep.pass ? "all checks passed\n" : "validation failed\n");
        return rep.pass ? exit_ok : exit_validation_error;
    } catch (const config_error &e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const invalid_parameter_error &e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

}  // namespace vspin
