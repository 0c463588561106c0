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

// Command-line front end: spectrum, level diagram, circuit runs, and the
// self-validation suite for the exchange-coupled spin pair.

#include "CLI11.hpp"
#include "vspin/cli.hpp"
#include "vspin/version.hpp"

int main(int argc, char **argv) {
    CLI::App app{"vspin: virtual-spin qubit simulator and pulse compiler for an "
                 "exchange-coupled spin-1/2 pair"};
    app.set_version_flag("--version", vspin::version_string);
    app.require_subcommand(1);

    std::string config_path;
    std::string circuit_path;
    std::string out_path;
    std::string format = "csv";
    std::string engine = "rwa";
    double rabi_budget = 0.0;
    int steps_per_period = 200;

    CLI::App *spectrum = app.add_subcommand("spectrum", "write the four allowed lines");
    spectrum->add_option("--config", config_path, "parameter file")->required();
    spectrum->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    spectrum->add_option("--out", out_path, "output path (default: stdout)");

    CLI::App *levels = app.add_subcommand("levels", "write the SVG level diagram");
    levels->add_option("--config", config_path, "parameter file")->required();
    levels->add_option("--out", out_path, "output path (default: stdout)");

    CLI::App *run = app.add_subcommand("run", "compile and simulate a circuit");
    run->add_option("--config", config_path, "parameter file")->required();
    run->add_option("--circuit", circuit_path, "circuit file")->required();
    run->add_option("--out", out_path, "report path (default: stdout)");
    run->add_option("--engine", engine, "rwa or labframe")
        ->check(CLI::IsMember({"rwa", "labframe"}));
    run->add_option("--rabi-budget", rabi_budget,
                    "peak drive amplitude omega1 (rad/s; default min_gap/100)");
    run->add_option("--steps-per-period", steps_per_period,
                    "lab-frame integration steps per carrier period");

    CLI::App *validate = app.add_subcommand("validate", "run the cross-check suite");
    validate->add_option("--config", config_path, "parameter file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return vspin::exit_input_error;
    }

    if (spectrum->parsed()) {
        const vspin::output_format fmt =
            format == "json" ? vspin::output_format::json : vspin::output_format::csv;
        return vspin::cmd_spectrum(config_path, fmt, out_path);
    }
    if (levels->parsed()) return vspin::cmd_levels(config_path, out_path);
    if (run->parsed()) {
        vspin::circuit_options options;
        options.engine = engine == "labframe" ? vspin::engine_kind::labframe
                                              : vspin::engine_kind::rwa;
        if (rabi_budget > 0.0) options.rabi_budget = rabi_budget;
        options.steps_per_period = steps_per_period;
        return vspin::cmd_run(config_path, circuit_path, out_path, options);
    }
    if (validate->parsed()) return vspin::cmd_validate(config_path);
    return vspin::exit_input_error;
}
