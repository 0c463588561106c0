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

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "test_support.hpp"
#include "vspin/cli.hpp"

using namespace vspin;
namespace fs = std::filesystem;

namespace {

struct temp_dir {
    fs::path path;
    temp_dir() {
        static int counter = 0;
        path = fs::temp_directory_path() /
               ("vspin_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~temp_dir() { fs::remove_all(path); }

    std::string file(const std::string &name, const std::string &content) const {
        const fs::path p = path / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p.string();
    }

    std::string read(const std::string &name) const {
        std::ifstream in(path / name, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
};

constexpr const char *reference_cfg = "omega0 = 1000\ndelta = 100\nj = 100\n";

std::vector<std::string> split_lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

int count_occurrences(const std::string &text, const std::string &needle) {
    int n = 0;
    for (size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++n;
    return n;
}

/// Value of `attr="..."` on each line containing `marker`.
std::vector<double> attribute_values(const std::string &svg, const std::string &marker,
                                     const std::string &attr) {
    std::vector<double> out;
    for (const std::string &line : split_lines(svg)) {
        if (line.find(marker) == std::string::npos) continue;
        const std::string key = attr + "=\"";
        const size_t at = line.find(key);
        if (at == std::string::npos) continue;
        const size_t end = line.find('"', at + key.size());
        out.push_back(std::stod(line.substr(at + key.size(), end - at - key.size())));
    }
    return out;
}

}  // namespace

TEST_CASE("cmd_spectrum writes the reference CSV", "[cli]") {
    temp_dir dir;
    const std::string cfg = dir.file("sys.cfg", reference_cfg);
    std::ostringstream out, err;
    const int rc = cmd_spectrum(cfg, output_format::csv, (dir.path / "lines.csv").string(),
                                out, err);
    REQUIRE(rc == exit_ok);

    const std::string csv = dir.read("lines.csv");
    const std::vector<std::string> rows = split_lines(csv);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "upper,lower,frequency_rad_s,intensity");
    CHECK(rows[1].starts_with("3,4,879.28932188134524,"));
    CHECK(rows[2].starts_with("1,2,979.28932188134524,"));
    CHECK(rows[3].starts_with("2,4,1020.7106781186548,"));
    CHECK(rows[4].starts_with("1,3,1120.7106781186549,"));
    CHECK(err.str().find("min_gap_rad_s = 41.421356237309") != std::string::npos);

    // Byte-identical on a second run.
    std::ostringstream out2, err2;
    REQUIRE(cmd_spectrum(cfg, output_format::csv, (dir.path / "lines2.csv").string(), out2,
                         err2) == exit_ok);
    CHECK(dir.read("lines2.csv") == csv);
}

TEST_CASE("cmd_spectrum json embeds the line list and min gap", "[cli]") {
    temp_dir dir;
    const std::string cfg = dir.file("sys.cfg", reference_cfg);
    std::ostringstream out, err;
    REQUIRE(cmd_spectrum(cfg, output_format::json, "", out, err) == exit_ok);
    const nlohmann::json j = nlohmann::json::parse(out.str());
    REQUIRE(j.at("transitions").size() == 4);
    CHECK(j.at("transitions")[0].at("upper") == 3);
    CHECK(j.at("transitions")[0].at("frequency_rad_s").get<double>() ==
          Catch::Approx(879.28932188134524).margin(1e-9));
    CHECK(j.at("min_gap_rad_s").get<double>() ==
          Catch::Approx(41.42135623730951).margin(1e-9));
}

TEST_CASE("cmd_spectrum with j = 0 reports unit intensities", "[cli]") {
    temp_dir dir;
    const std::string cfg = dir.file("sys.cfg", "omega0 = 1000\ndelta = 100\nj = 0\n");
    std::ostringstream out, err;
    REQUIRE(cmd_spectrum(cfg, output_format::csv, "", out, err) == exit_ok);
    const std::vector<std::string> rows = split_lines(out.str());
    REQUIRE(rows.size() == 5);
    for (size_t k = 1; k < rows.size(); ++k)
        CHECK(rows[k].substr(rows[k].rfind(',') + 1) == "1");
}

TEST_CASE("cmd_spectrum input failures exit with 2 and name the key", "[cli]") {
    temp_dir dir;
    std::ostringstream out, err;
    const std::string cfg = dir.file("bad.cfg", "gamma_i = 1\ngamma_s = 2\nj = 3\n");
    CHECK(cmd_spectrum(cfg, output_format::csv, "", out, err) == exit_input_error);
    CHECK(err.str().find("h0") != std::string::npos);

    std::ostringstream err2;
    CHECK(cmd_spectrum((dir.path / "missing.cfg").string(), output_format::csv, "", out,
                       err2) == exit_input_error);
}

TEST_CASE("cmd_spectrum unwritable output exits with 3", "[cli]") {
    temp_dir dir;
    const std::string cfg = dir.file("sys.cfg", reference_cfg);
    std::ostringstream out, err;
    CHECK(cmd_spectrum(cfg, output_format::csv, "/nonexistent-dir/lines.csv", out, err) ==
          exit_io_error);
}

TEST_CASE("cmd_levels draws four levels and four arrows", "[cli]") {
    temp_dir dir;
    const std::string cfg = dir.file("sys.cfg", reference_cfg);
    std::ostringstream out, err;
    REQUIRE(cmd_levels(cfg, (dir.path / "levels.svg").string(), out, err) == exit_ok);
    const std::string svg = dir.read("levels.svg");

    CHECK(count_occurrences(svg, "class=\"level\"") == 4);
    CHECK(count_occurrences(svg, "class=\"transition\"") == 4);
    CHECK(count_occurrences(svg, "marker-end=\"url(#arrow)\"") == 4);
    CHECK(svg.find("|00⟩") != std::string::npos);
    CHECK(svg.find("ψ4") != std::string::npos);

    // Level heights must order like the energies: higher energy, smaller y.
    const eigensystem eg = analytic_eigensystem(params_from_larmor(1000.0, 100.0, 100.0));
    const std::vector<double> ys = attribute_values(svg, "class=\"level\"", "y1");
    const std::vector<double> es = attribute_values(svg, "class=\"level\"", "data-energy");
    REQUIRE(ys.size() == 4);
    for (size_t i = 0; i < 4; ++i)
        CHECK(es[i] == Catch::Approx(eg.energies[i]).margin(1e-9));
    for (size_t i = 0; i < 4; ++i)
        for (size_t k = 0; k < 4; ++k)
            if (eg.energies[i] > eg.energies[k]) CHECK(ys[i] < ys[k]);

    // Byte-identical on a second run.
    std::ostringstream out2, err2;
    REQUIRE(cmd_levels(cfg, (dir.path / "levels2.svg").string(), out2, err2) == exit_ok);
    CHECK(dir.read("levels2.svg") == svg);
}

TEST_CASE("cmd_levels marks dark transitions at delta = 0", "[cli]") {
    temp_dir dir;
    const std::string cfg = dir.file("sys.cfg", "omega0 = 1000\ndelta = 0\nj = 100\n");
    std::ostringstream out, err;
    REQUIRE(cmd_levels(cfg, "", out, err) == exit_ok);
    const std::string svg = out.str();
    // The 1<->3 and 3<->4 singlet lines carry intensity 0.
    for (const std::string &line : split_lines(svg)) {
        if (line.find("class=\"transition\"") == std::string::npos) continue;
        const bool singlet = line.find("data-upper=\"1\" data-lower=\"3\"") != std::string::npos ||
                             line.find("data-upper=\"3\" data-lower=\"4\"") != std::string::npos;
        const std::vector<double> intensity =
            attribute_values(line, "class=\"transition\"", "data-intensity");
        REQUIRE(intensity.size() == 1);
        if (singlet) CHECK(intensity[0] <= 1e-12);
        else CHECK(intensity[0] == Catch::Approx(2.0).margin(1e-12));
    }
}

TEST_CASE("cmd_levels unwritable output exits with 3", "[cli]") {
    temp_dir dir;
    const std::string cfg = dir.file("sys.cfg", reference_cfg);
    std::ostringstream out, err;
    CHECK(cmd_levels(cfg, "/nonexistent-dir/l.svg", out, err) == exit_io_error);
}

TEST_CASE("cmd_run: cnot on |10> lands in |11>", "[cli]") {
    temp_dir dir;
    const std::string cfg = dir.file("sys.cfg", reference_cfg);
    const std::string circ = dir.file("c.circ", "init 10\ncnot_q\n");
    std::ostringstream out, err;
    REQUIRE(cmd_run(cfg, circ, "", {}, out, err) == exit_ok);
    const nlohmann::json rep = nlohmann::json::parse(out.str());
    CHECK(rep.at("schema") == 1);
    CHECK(rep.at("engine") == "rwa");
    CHECK(rep.at("final_populations").at("11").get<double>() ==
          Catch::Approx(1.0).margin(1e-9));
    CHECK(rep.at("gates")[0].at("fidelity").get<double>() ==
          Catch::Approx(1.0).margin(1e-9));
    REQUIRE(rep.at("gates")[0].at("schedule").size() == 1);
}

TEST_CASE("cmd_run: empty circuit leaves the initial state", "[cli]") {
    temp_dir dir;
    const std::string cfg = dir.file("sys.cfg", reference_cfg);
    const std::string circ = dir.file("c.circ", "init 00\n");
    std::ostringstream out, err;
    REQUIRE(cmd_run(cfg, circ, "", {}, out, err) == exit_ok);
    const nlohmann::json rep = nlohmann::json::parse(out.str());
    CHECK(rep.at("final_populations").at("00").get<double>() == 1.0);
    CHECK(rep.at("gates").empty());
}

TEST_CASE("cmd_run: rotq(pi) then cnot_q maps |00> to |11>", "[cli]") {
    temp_dir dir;
    const std::string cfg = dir.file("sys.cfg", reference_cfg);
    const std::string circ = dir.file("c.circ", "init 00\nrotq pi 0\ncnot_q\n");
    std::ostringstream out, err;
    REQUIRE(cmd_run(cfg, circ, "", {}, out, err) == exit_ok);
    const nlohmann::json rep = nlohmann::json::parse(out.str());
    CHECK(rep.at("final_populations").at("11").get<double>() ==
          Catch::Approx(1.0).margin(1e-9));
}

TEST_CASE("cmd_run: bell-pair circuit splits 00/11 and is byte-deterministic", "[cli]") {
    temp_dir dir;
    const std::string cfg = dir.file("sys.cfg", reference_cfg);
    const std::string circ = dir.file("c.circ", "init 00\nrotq pi/2 0\ncnot_q\n");
    std::ostringstream out1, out2, err;
    REQUIRE(cmd_run(cfg, circ, (dir.path / "r1.json").string(), {}, out1, err) == exit_ok);
    REQUIRE(cmd_run(cfg, circ, (dir.path / "r2.json").string(), {}, out2, err) == exit_ok);
    const std::string r1 = dir.read("r1.json");
    CHECK(r1 == dir.read("r2.json"));

    const nlohmann::json rep = nlohmann::json::parse(r1);
    CHECK(rep.at("final_populations").at("00").get<double>() ==
          Catch::Approx(0.5).margin(1e-9));
    CHECK(rep.at("final_populations").at("11").get<double>() ==
          Catch::Approx(0.5).margin(1e-9));
    CHECK(rep.at("final_populations").at("01").get<double>() ==
          Catch::Approx(0.0).margin(1e-9));
    CHECK(rep.at("final_populations").at("10").get<double>() ==
          Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("cmd_run with the lab-frame engine stays close to the permutation", "[cli]") {
    temp_dir dir;
    const std::string cfg = dir.file("sys.cfg", reference_cfg);
    const std::string circ = dir.file("c.circ", "init 10\ncnot_q\n");
    circuit_options options;
    options.engine = engine_kind::labframe;
    std::ostringstream out, err;
    REQUIRE(cmd_run(cfg, circ, "", options, out, err) == exit_ok);
    const nlohmann::json rep = nlohmann::json::parse(out.str());
    CHECK(rep.at("engine") == "labframe");
    CHECK(rep.at("final_populations").at("11").get<double>() >= 0.999);
}

TEST_CASE("cmd_run failure modes: exit 4 on selectivity, exit 2 on parse", "[cli]") {
    temp_dir dir;
    const std::string cfg = dir.file("sys.cfg", reference_cfg);

    const std::string circ = dir.file("c.circ", "init 00\ncnot_q\n");
    circuit_options options;
    options.rabi_budget = 1e3;  // brutally unselective
    std::ostringstream out, err;
    CHECK(cmd_run(cfg, circ, "", options, out, err) == exit_compile_error);
    CHECK(err.str().find("gate 1") != std::string::npos);

    const std::string bad = dir.file("bad.circ", "init 00\nwat\n");
    std::ostringstream out2, err2;
    CHECK(cmd_run(cfg, bad, "", {}, out2, err2) == exit_input_error);
    CHECK(err2.str().find("line 2") != std::string::npos);
}

TEST_CASE("cmd_validate passes the reference system", "[cli]") {
    temp_dir dir;
    const std::string cfg = dir.file("sys.cfg", reference_cfg);
    std::ostringstream out, err;
    REQUIRE(cmd_validate(cfg, out, err) == exit_ok);
    CHECK(out.str().find("FAIL") == std::string::npos);
    CHECK(count_occurrences(out.str(), "PASS ") >= 8);
    CHECK(out.str().find("all checks passed") != std::string::npos);
}

TEST_CASE("cmd_validate detects an injected eigenvalue corruption", "[cli]") {
    temp_dir dir;
    const std::string cfg = dir.file("sys.cfg", reference_cfg);
    std::ostringstream out, err;
    const int rc = cmd_validate(cfg, out, err,
                                [](eigensystem &eg) { eg.energies[1] += 1e-3; });
    CHECK(rc == exit_validation_error);
    CHECK(out.str().find("FAIL") != std::string::npos);
}

TEST_CASE("cmd_validate handles the fully degenerate system with a note", "[cli]") {
    temp_dir dir;
    const std::string cfg = dir.file("sys.cfg", "omega0 = 1000\ndelta = 0\nj = 0\n");
    std::ostringstream out, err;
    REQUIRE(cmd_validate(cfg, out, err) == exit_ok);
    CHECK(out.str().find("note: degenerate regime") != std::string::npos);
}
