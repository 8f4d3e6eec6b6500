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

// Python bindings. Structured results cross the boundary as JSON text and are
// decoded by the pure-Python wrapper in qoracle/__init__.py.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qoracle/circuit_io.h"
#include "qoracle/depth_analysis.h"
#include "qoracle/doc_card.h"
#include "qoracle/oracles.h"
#include "qoracle/simulator.h"
#include "qoracle/verify.h"

namespace py = pybind11;
using namespace qoracle;

namespace {

OracleRequest make_request(const std::string &oracle, size_t qubits, uint64_t m, uint64_t a, uint64_t n1,
                           uint64_t n2, std::vector<Qubit> participants) {
    auto id = oracle_id_from_name(oracle);
    if (!id) {
        throw std::invalid_argument("unknown oracle '" + oracle + "'");
    }
    return {*id, qubits, m, a, n1, n2, std::move(participants)};
}

BasisSet basis_of(const std::string &text) {
    return text.empty() ? BasisSet::ibm_default() : BasisSet::parse(text);
}

#define ORACLE_ARGS                                                                                       \
    py::arg("oracle"), py::kw_only(), py::arg("qubits") = 3, py::arg("m") = 0, py::arg("a") = 0,          \
        py::arg("n1") = 0, py::arg("n2") = 0, py::arg("participants") = std::vector<Qubit>{}

}  // namespace

PYBIND11_MODULE(_qoracle, mod) {
    mod.doc() = "Phase oracle builders, simulator, depth analysis and documentation cards.";
    py::register_exception<std::invalid_argument>(mod, "QOracleError", PyExc_ValueError);

    py::class_<Circuit>(mod, "Circuit")
        .def_property_readonly("num_qubits", &Circuit::num_qubits)
        .def("__len__", &Circuit::size)
        .def("depth", [](const Circuit &c) { return depth(c); })
        .def("to_text", [](const Circuit &c) { return to_text(c); })
        .def("to_json", [](const Circuit &c) { return to_json(c).dump(); })
        .def_static("from_text", [](const std::string &t) { return parse_text(t); })
        .def_static("from_json", [](const std::string &t) { return circuit_from_json(nlohmann::json::parse(t)); })
        .def("__eq__", [](const Circuit &a, const Circuit &b) { return a == b; })
        .def("__repr__", [](const Circuit &c) {
            return "<qoracle.Circuit qubits=" + std::to_string(c.num_qubits()) + " gates=" + std::to_string(c.size()) +
                   ">";
        });

    mod.def(
        "build",
        [](const std::string &oracle, size_t qubits, uint64_t m, uint64_t a, uint64_t n1, uint64_t n2,
           std::vector<Qubit> participants) {
            return build_oracle(make_request(oracle, qubits, m, a, n1, n2, std::move(participants)));
        },
        ORACLE_ARGS);

    mod.def(
        "decompose", [](const Circuit &c, const std::string &basis) { return decompose_to_basis(c, basis_of(basis)); },
        py::arg("circuit"), py::arg("basis") = "");

    mod.def(
        "simulate",
        [](const Circuit &c, const std::string &input) {
            auto out = apply_circuit(c, InputChoice::parse(input).make(c.num_qubits()));
            auto amps = out.amplitudes();
            return std::vector<std::complex<double>>(amps.begin(), amps.end());
        },
        py::arg("circuit"), py::arg("input") = "uniform");

    mod.def(
        "phase_profile_json",
        [](const Circuit &c, const std::string &input) {
            return phase_profile(apply_circuit(c, InputChoice::parse(input).make(c.num_qubits()))).to_json().dump();
        },
        py::arg("circuit"), py::arg("input") = "uniform");

    mod.def(
        "unitary",
        [](const Circuit &c) {
            auto u = circuit_unitary(c);
            std::vector<std::vector<std::complex<double>>> rows(u.dim(), std::vector<std::complex<double>>(u.dim()));
            for (size_t r = 0; r < u.dim(); r++) {
                for (size_t col = 0; col < u.dim(); col++) {
                    rows[r][col] = u.at(r, col);
                }
            }
            return rows;
        },
        py::arg("circuit"));

    mod.def(
        "verify_json",
        [](const std::string &oracle, size_t qubits, uint64_t m, uint64_t a, uint64_t n1, uint64_t n2,
           std::vector<Qubit> participants, const std::string &level, double tol, const std::string &input) {
            auto req = make_request(oracle, qubits, m, a, n1, n2, std::move(participants));
            if (level == "unitary") {
                return verify_unitary(req, tol).to_json().dump();
            }
            if (level != "state") {
                throw std::invalid_argument("level must be 'unitary' or 'state'");
            }
            std::optional<InputChoice> choice;
            if (!input.empty()) {
                choice = InputChoice::parse(input);
            }
            return verify_state(req, tol, choice).to_json().dump();
        },
        ORACLE_ARGS, py::arg("level") = "unitary", py::arg("tol") = 1e-9, py::arg("input") = "");

    mod.def(
        "measure_pair_json",
        [](size_t n, uint64_t n1, uint64_t n2, const std::string &basis) {
            auto r = measure_pair({n, n1, n2}, basis_of(basis));
            return nlohmann::json{{"n", r.n},           {"n1", r.n1},          {"n2", r.n2},
                                  {"depth_a", r.depth_a}, {"depth_b", r.depth_b}, {"gates_a", r.gates_a},
                                  {"gates_b", r.gates_b}}
                .dump();
        },
        py::arg("n"), py::arg("n1"), py::arg("n2"), py::arg("basis") = "");

    mod.def(
        "sweep_json",
        [](size_t n_min, size_t n_max, const std::string &basis, unsigned threads) {
            auto b = basis_of(basis);
            SweepResult result;
            {
                py::gil_scoped_release release;
                result = sweep(n_min, n_max, b, threads);
            }
            return to_json(result, b).dump();
        },
        py::arg("n_min") = 3, py::arg("n_max") = 8, py::arg("basis") = "", py::arg("threads") = 0);

    mod.def(
        "sweep_csv",
        [](size_t n_min, size_t n_max, const std::string &basis, unsigned threads) {
            auto b = basis_of(basis);
            py::gil_scoped_release release;
            return to_csv(sweep(n_min, n_max, b, threads).records, b);
        },
        py::arg("n_min") = 3, py::arg("n_max") = 8, py::arg("basis") = "", py::arg("threads") = 0);

    mod.def(
        "card",
        [](const std::string &oracle, size_t qubits, uint64_t m, uint64_t a, uint64_t n1, uint64_t n2,
           std::vector<Qubit> participants, const std::string &format, size_t sweep_n_max) {
            auto req = make_request(oracle, qubits, m, a, n1, n2, std::move(participants));
            auto fmt = card_format_from_name(format);
            if (!fmt) {
                throw std::invalid_argument("format must be 'json' or 'markdown'");
            }
            std::optional<SweepResult> data;
            if (sweep_n_max != 0) {
                data = sweep(3, sweep_n_max);
            }
            return render(generate_card(req, data ? &*data : nullptr), *fmt);
        },
        ORACLE_ARGS, py::arg("format") = "json", py::arg("sweep_n_max") = 0);

    mod.def(
        "check_card_json",
        [](const std::string &card_json, double tol) {
            return check_card(card_from_json(nlohmann::json::parse(card_json)), tol).to_json().dump();
        },
        py::arg("card_json"), py::arg("tol") = 1e-9);
}
