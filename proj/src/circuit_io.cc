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

#include "qoracle/circuit_io.h"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qoracle {

namespace {

std::string format_angle(double theta) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", theta);
    return buf;
}

[[noreturn]] void parse_error(size_t line_no, const std::string &msg) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
}

Qubit parse_qubit(const std::string &word, size_t line_no) {
    try {
        size_t used = 0;
        unsigned long v = std::stoul(word, &used);
        if (used != word.size() || word[0] == '-') {
            parse_error(line_no, "bad qubit index '" + word + "'");
        }
        return static_cast<Qubit>(v);
    } catch (const std::logic_error &) {
        parse_error(line_no, "bad qubit index '" + word + "'");
    }
}

}  // namespace

std::string to_text(const Circuit &circuit) {
    std::string out = "qubits " + std::to_string(circuit.num_qubits()) + "\n";
    for (const auto &g : circuit.gates()) {
        out += gate_kind_name(g.kind);
        if (gate_kind_has_angle(g.kind)) {
            out += " " + format_angle(g.theta);
        }
        for (auto q : g.qubits) {
            out += " " + std::to_string(q);
        }
        out += "\n";
    }
    return out;
}

Circuit parse_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_no = 0;
    std::optional<Circuit> circuit;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream words(line);
        std::string head;
        if (!(words >> head) || head[0] == '#') {
            continue;
        }
        if (!circuit) {
            size_t n = 0;
            if (head != "qubits" || !(words >> n) || n == 0) {
                parse_error(line_no, "expected header 'qubits N'");
            }
            circuit.emplace(n);
            continue;
        }
        auto kind = gate_kind_from_name(head);
        if (!kind) {
            parse_error(line_no, "unknown gate '" + head + "'");
        }
        Gate g{*kind, {}};
        if (gate_kind_has_angle(*kind)) {
            std::string angle;
            if (!(words >> angle)) {
                parse_error(line_no, head + " needs an angle");
            }
            try {
                size_t used = 0;
                g.theta = std::stod(angle, &used);
                if (used != angle.size()) {
                    parse_error(line_no, "bad angle '" + angle + "'");
                }
            } catch (const std::logic_error &) {
                parse_error(line_no, "bad angle '" + angle + "'");
            }
        }
        std::string word;
        while (words >> word) {
            g.qubits.push_back(parse_qubit(word, line_no));
        }
        try {
            circuit->add(std::move(g));
        } catch (const std::invalid_argument &e) {
            parse_error(line_no, e.what());
        }
    }
    if (!circuit) {
        throw std::invalid_argument("missing 'qubits N' header");
    }
    return *circuit;
}

nlohmann::json to_json(const Circuit &circuit) {
    auto gates = nlohmann::json::array();
    for (const auto &g : circuit.gates()) {
        nlohmann::json jg;
        jg["kind"] = gate_kind_name(g.kind);
        if (gate_kind_has_angle(g.kind)) {
            jg["theta"] = g.theta;
        }
        jg["qubits"] = g.qubits;
        gates.push_back(std::move(jg));
    }
    return {{"qubits", circuit.num_qubits()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const nlohmann::json &j) {
    try {
        Circuit circuit(j.at("qubits").get<size_t>());
        for (const auto &jg : j.at("gates")) {
            auto name = jg.at("kind").get<std::string>();
            auto kind = gate_kind_from_name(name);
            if (!kind) {
                throw std::invalid_argument("unknown gate '" + name + "'");
            }
            Gate g{*kind, jg.at("qubits").get<std::vector<Qubit>>()};
            if (gate_kind_has_angle(*kind)) {
                g.theta = jg.at("theta").get<double>();
            }
            circuit.add(std::move(g));
        }
        return circuit;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed circuit JSON: ") + e.what());
    }
}

}  // namespace qoracle
