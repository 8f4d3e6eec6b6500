// Copyright 2026 The qoracle Authors
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

// qoracle: build, simulate, verify, depth-sweep and document phase oracles.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.
// Data goes to stdout, diagnostics to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qoracle/circuit_io.h"
#include "qoracle/depth_analysis.h"
#include "qoracle/doc_card.h"
#include "qoracle/oracles.h"
#include "qoracle/simulator.h"
#include "qoracle/verify.h"

namespace {

using namespace qoracle;

constexpr int EXIT_VERIFY_FAILED = 1;
constexpr int EXIT_USAGE = 2;

struct OracleFlags {
    std::string oracle;
    size_t qubits = 3;
    uint64_t m = 0;
    uint64_t a = 0;
    uint64_t n1 = 0;
    uint64_t n2 = 0;
    std::vector<Qubit> participants;

    void attach(CLI::App *cmd) {
        cmd->add_option("--oracle", oracle, "mcz | less-than | qft | add | range-a | range-b")
            ->required()
            ->check(CLI::IsMember({"mcz", "less-than", "qft", "add", "range-a", "range-b"}));
        cmd->add_option("--qubits", qubits, "Register size")->capture_default_str();
        cmd->add_option("--m", m, "less-than threshold");
        cmd->add_option("--a", a, "add: constant addend");
        cmd->add_option("--n1", n1, "range lower bound (inclusive)");
        cmd->add_option("--n2", n2, "range upper bound (inclusive)");
        cmd->add_option("--participants", participants, "mcz participants (default: every qubit)");
    }

    OracleRequest request() const {
        return {*oracle_id_from_name(oracle), qubits, m, a, n1, n2, participants};
    }
};

BasisSet resolve_basis(const std::string &flag) {
    if (!flag.empty()) {
        return BasisSet::parse(flag);
    }
    if (const char *path = std::getenv("QORACLE_BASIS_FILE")) {
        std::ifstream in(path);
        if (!in) {
            throw std::invalid_argument(std::string("cannot read QORACLE_BASIS_FILE ") + path);
        }
        std::stringstream buf;
        buf << in.rdbuf();
        return BasisSet::parse(buf.str());
    }
    return BasisSet::ibm_default();
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Build, simulate, verify, depth-analyze and document phase oracles."};
    app.require_subcommand(1);
    bool json_out = false;
    std::string basis_flag;
    app.add_flag("--json", json_out, "Machine-readable JSON on stdout");
    app.add_option("--basis", basis_flag, "Basis gate kinds, e.g. CX,RZ,SX,X (default: $QORACLE_BASIS_FILE or CX,RZ,SX,X)");

    auto *build_cmd = app.add_subcommand("build", "Emit an oracle circuit");
    OracleFlags build_flags;
    build_flags.attach(build_cmd);
    bool decompose = false;
    build_cmd->add_flag("--decompose", decompose, "Lower the circuit to the basis gate set first");
    build_cmd->add_flag("--json", json_out, "JSON instead of the text format");

    auto *sim_cmd = app.add_subcommand("simulate", "Print the phase profile of an oracle applied to an input");
    OracleFlags sim_flags;
    sim_flags.attach(sim_cmd);
    std::string sim_input = "uniform";
    sim_cmd->add_option("--input", sim_input, "uniform | basis:K")->capture_default_str();
    sim_cmd->add_flag("--json", json_out, "JSON output");

    auto *verify_cmd = app.add_subcommand("verify", "Check an oracle against its closed-form contract");
    OracleFlags verify_flags;
    verify_flags.attach(verify_cmd);
    std::string level = "unitary";
    double tol = 1e-9;
    std::string verify_input;
    verify_cmd->add_option("--level", level, "unitary | state")
        ->check(CLI::IsMember({"unitary", "state"}))
        ->capture_default_str();
    verify_cmd->add_option("--tol", tol, "Elementwise tolerance")->capture_default_str();
    verify_cmd->add_option("--input", verify_input, "State level input: uniform | basis:K (default: precondition input)");
    verify_cmd->add_flag("--json", json_out, "JSON output");

    auto *sweep_cmd = app.add_subcommand("sweep", "Depth of implementations A and B over every interval");
    size_t n_min = 3;
    size_t n_max = 8;
    std::string out_path;
    unsigned threads = 0;
    bool growth = false;
    sweep_cmd->add_option("--n-min", n_min, "Smallest qubit count")->capture_default_str();
    sweep_cmd->add_option("--n-max", n_max, "Largest qubit count")->capture_default_str();
    sweep_cmd->add_option("--out", out_path, "Write the CSV here instead of stdout");
    sweep_cmd->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
    sweep_cmd->add_flag("--growth", growth, "Print the growth check to stderr");
    sweep_cmd->add_flag("--json", json_out, "JSON records and summary on stdout");

    auto *card_cmd = app.add_subcommand("card", "Generate a documentation card");
    OracleFlags card_flags;
    card_flags.attach(card_cmd);
    std::string format = "markdown";
    size_t card_sweep_max = 0;
    bool card_check = false;
    card_cmd->add_option("--format", format, "json | markdown")
        ->check(CLI::IsMember({"json", "markdown"}))
        ->capture_default_str();
    card_cmd->add_option("--sweep-n-max", card_sweep_max,
                         "Attach a depth summary for n = 3 .. N (range oracles only)");
    card_cmd->add_flag("--check", card_check, "Verify the generated card and print the report to stderr");
    card_cmd->add_flag("--json", json_out, "Same as --format json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return EXIT_USAGE;
    }

    try {
        BasisSet basis = resolve_basis(basis_flag);

        if (build_cmd->parsed()) {
            Circuit c = build_oracle(build_flags.request());
            if (decompose) {
                c = decompose_to_basis(c, basis);
            }
            std::cout << (json_out ? to_json(c).dump(2) + "\n" : to_text(c));
            return 0;
        }

        if (sim_cmd->parsed()) {
            auto req = sim_flags.request();
            Circuit c = build_oracle(req);
            auto state = apply_circuit(c, InputChoice::parse(sim_input).make(c.num_qubits()));
            auto profile = phase_profile(state);
            std::cout << (json_out ? profile.to_json().dump(2) + "\n" : profile.to_table());
            return 0;
        }

        if (verify_cmd->parsed()) {
            auto req = verify_flags.request();
            VerifyReport report;
            if (level == "unitary") {
                report = verify_unitary(req, tol);
            } else {
                std::optional<InputChoice> input;
                if (!verify_input.empty()) {
                    input = InputChoice::parse(verify_input);
                }
                report = verify_state(req, tol, input);
            }
            std::cout << (json_out ? report.to_json().dump(2) + "\n" : report.to_text());
            return report.passed ? 0 : EXIT_VERIFY_FAILED;
        }

        if (sweep_cmd->parsed()) {
            auto result = sweep(n_min, n_max, basis, threads);
            if (growth) {
                try {
                    std::cerr << growth_check(result.records).to_text();
                } catch (const std::invalid_argument &e) {
                    std::cerr << "growth check skipped: " << e.what() << "\n";
                }
            }
            if (!out_path.empty()) {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) {
                    std::cerr << "error: cannot write " << out_path << "\n";
                    return EXIT_USAGE;
                }
                out << to_csv(result.records, basis);
            }
            if (json_out) {
                std::cout << to_json(result, basis).dump(2) << "\n";
            } else if (out_path.empty()) {
                std::cout << to_csv(result.records, basis);
            } else {
                for (const auto &row : result.summary.rows) {
                    std::cout << "n=" << row.n << " intervals=" << row.records << " median_a=" << row.depth_a.median
                              << " median_b=" << row.depth_b.median
                              << " b_shallower=" << row.b_shallower_fraction << "\n";
                }
            }
            return 0;
        }

        if (card_cmd->parsed()) {
            auto req = card_flags.request();
            std::optional<SweepResult> sweep_data;
            if (card_sweep_max != 0) {
                sweep_data = sweep(3, card_sweep_max, basis);
            }
            auto card = generate_card(req, sweep_data ? &*sweep_data : nullptr, basis);
            auto fmt = json_out ? CardFormat::Json : *card_format_from_name(format);
            std::cout << render(card, fmt);
            if (card_check) {
                auto report = check_card(card, 1e-9, basis);
                std::cerr << report.to_text();
                return report.ok() ? 0 : EXIT_VERIFY_FAILED;
            }
            return 0;
        }
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}
