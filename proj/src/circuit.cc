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

#include "qoracle/circuit.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qoracle {

namespace {

struct KindInfo {
    GateKind kind;
    std::string_view name;
    size_t arity;
    bool has_angle;
};

constexpr std::array<KindInfo, 9> KIND_TABLE{{
    {GateKind::H, "H", 1, false},
    {GateKind::X, "X", 1, false},
    {GateKind::SX, "SX", 1, false},
    {GateKind::Z, "Z", 1, false},
    {GateKind::RZ, "RZ", 1, true},
    {GateKind::P, "P", 1, true},
    {GateKind::CX, "CX", 2, false},
    {GateKind::CP, "CP", 2, true},
    {GateKind::MCZ, "MCZ", 0, false},
}};

const KindInfo &info(GateKind kind) {
    return KIND_TABLE[static_cast<size_t>(kind)];
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
    return info(kind).name;
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (const auto &e : KIND_TABLE) {
        if (e.name == name) {
            return e.kind;
        }
    }
    return std::nullopt;
}

bool gate_kind_has_angle(GateKind kind) {
    return info(kind).has_angle;
}

size_t gate_kind_arity(GateKind kind) {
    return info(kind).arity;
}

Gate Gate::h(Qubit q) {
    return {GateKind::H, {q}};
}
Gate Gate::x(Qubit q) {
    return {GateKind::X, {q}};
}
Gate Gate::sx(Qubit q) {
    return {GateKind::SX, {q}};
}
Gate Gate::z(Qubit q) {
    return {GateKind::Z, {q}};
}
Gate Gate::rz(double theta, Qubit q) {
    return {GateKind::RZ, {q}, theta};
}
Gate Gate::p(double theta, Qubit q) {
    return {GateKind::P, {q}, theta};
}
Gate Gate::cx(Qubit control, Qubit target) {
    return {GateKind::CX, {control, target}};
}
Gate Gate::cp(double theta, Qubit a, Qubit b) {
    return {GateKind::CP, {a, b}, theta};
}
Gate Gate::mcz(std::vector<Qubit> participants) {
    return {GateKind::MCZ, std::move(participants)};
}

void Gate::validate(size_t n_qubits) const {
    auto name = std::string(gate_kind_name(kind));
    size_t arity = gate_kind_arity(kind);
    if (arity != 0 && qubits.size() != arity) {
        throw std::invalid_argument(
            name + " takes " + std::to_string(arity) + " operand(s), got " + std::to_string(qubits.size()));
    }
    if (qubits.empty()) {
        throw std::invalid_argument(name + " needs at least one operand");
    }
    for (size_t i = 0; i < qubits.size(); i++) {
        if (qubits[i] >= n_qubits) {
            throw std::invalid_argument(
                name + " operand q" + std::to_string(qubits[i]) + " out of range for " + std::to_string(n_qubits) +
                " qubits");
        }
        for (size_t j = 0; j < i; j++) {
            if (qubits[i] == qubits[j]) {
                throw std::invalid_argument(name + " has duplicate operand q" + std::to_string(qubits[i]));
            }
        }
    }
    if (!std::isfinite(theta)) {
        throw std::invalid_argument(name + " angle is not finite");
    }
}

Circuit::Circuit(size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
}

Circuit::Circuit(size_t n_qubits, std::vector<Gate> gates) : Circuit(n_qubits) {
    gates_.reserve(gates.size());
    for (auto &g : gates) {
        add(std::move(g));
    }
}

Circuit &Circuit::add(Gate gate) {
    gate.validate(n_qubits_);
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::extend(const Circuit &other) {
    if (other.n_qubits_ != n_qubits_) {
        throw std::invalid_argument(
            "cannot compose circuits over " + std::to_string(n_qubits_) + " and " + std::to_string(other.n_qubits_) +
            " qubits");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit append(const Circuit &circuit, Gate gate) {
    Circuit result = circuit;
    result.add(std::move(gate));
    return result;
}

Circuit compose(const Circuit &first, const Circuit &second) {
    Circuit result = first;
    result.extend(second);
    return result;
}

size_t depth(const Circuit &circuit) {
    std::vector<size_t> level(circuit.num_qubits(), 0);
    size_t result = 0;
    for (const auto &g : circuit.gates()) {
        size_t layer = 0;
        for (auto q : g.qubits) {
            layer = std::max(layer, level[q]);
        }
        layer += 1;
        for (auto q : g.qubits) {
            level[q] = layer;
        }
        result = std::max(result, layer);
    }
    return result;
}

Circuit relabel(const Circuit &circuit, const std::vector<Qubit> &mapping) {
    size_t n = circuit.num_qubits();
    if (mapping.size() != n) {
        throw std::invalid_argument("relabel mapping must cover every qubit");
    }
    std::vector<bool> seen(n, false);
    for (auto q : mapping) {
        if (q >= n || seen[q]) {
            throw std::invalid_argument("relabel mapping is not a permutation");
        }
        seen[q] = true;
    }
    Circuit result(n);
    for (auto g : circuit.gates()) {
        for (auto &q : g.qubits) {
            q = mapping[q];
        }
        result.add(std::move(g));
    }
    return result;
}

BasisSet::BasisSet(std::initializer_list<GateKind> kinds) : BasisSet(std::set<GateKind>(kinds)) {
}

BasisSet::BasisSet(std::set<GateKind> kinds) : kinds_(std::move(kinds)) {
    if (kinds_.empty()) {
        throw std::invalid_argument("basis set is empty");
    }
}

BasisSet BasisSet::ibm_default() {
    return {GateKind::CX, GateKind::RZ, GateKind::SX, GateKind::X};
}

BasisSet BasisSet::parse(std::string_view text) {
    std::string normalized(text);
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream in(normalized);
    std::set<GateKind> kinds;
    std::string word;
    while (in >> word) {
        std::transform(word.begin(), word.end(), word.begin(), [](unsigned char c) { return std::toupper(c); });
        auto kind = gate_kind_from_name(word);
        if (!kind) {
            throw std::invalid_argument("unknown gate kind in basis: " + word);
        }
        kinds.insert(*kind);
    }
    return BasisSet(std::move(kinds));
}

std::string BasisSet::str() const {
    std::string out;
    for (auto k : kinds_) {
        if (!out.empty()) {
            out += ",";
        }
        out += gate_kind_name(k);
    }
    return out;
}

namespace {

using std::numbers::pi;

/// Ancilla-free multi-controlled Z over P and CX.
///
/// Uses the identity x_0 x_1 ... x_{k-1} = 2^{1-k} sum_{S != {}} (-1)^{|S|-1} parity_S(x).
/// For each highest element h the subsets below it are visited in Gray-code
/// order so consecutive parities differ by a single CX onto qubit h.
void expand_mcz(const std::vector<Qubit> &ps, std::vector<Gate> &out) {
    size_t k = ps.size();
    if (k == 1) {
        out.push_back(Gate::z(ps[0]));
        return;
    }
    double unit = pi / static_cast<double>(uint64_t{1} << (k - 1));
    for (size_t h = 0; h < k; h++) {
        Qubit target = ps[h];
        uint64_t codes = uint64_t{1} << h;
        uint64_t prev = 0;
        out.push_back(Gate::p(unit, target));
        for (uint64_t i = 1; i < codes; i++) {
            uint64_t code = i ^ (i >> 1);
            auto changed = static_cast<size_t>(std::countr_zero(code ^ prev));
            out.push_back(Gate::cx(ps[changed], target));
            bool odd = ((std::popcount(code) + 1) & 1) != 0;
            out.push_back(Gate::p(odd ? unit : -unit, target));
            prev = code;
        }
        if (h > 0) {
            out.push_back(Gate::cx(ps[h - 1], target));
        }
    }
}

/// One rewrite step; returns false when the kind has no rule.
bool rewrite(const Gate &g, std::vector<Gate> &out) {
    switch (g.kind) {
        case GateKind::H:
            out.push_back(Gate::rz(pi / 2, g.qubits[0]));
            out.push_back(Gate::sx(g.qubits[0]));
            out.push_back(Gate::rz(pi / 2, g.qubits[0]));
            return true;
        case GateKind::Z:
            out.push_back(Gate::rz(pi, g.qubits[0]));
            return true;
        case GateKind::P:
            out.push_back(Gate::rz(g.theta, g.qubits[0]));
            return true;
        case GateKind::X:
            out.push_back(Gate::sx(g.qubits[0]));
            out.push_back(Gate::sx(g.qubits[0]));
            return true;
        case GateKind::CP: {
            Qubit a = g.qubits[0];
            Qubit b = g.qubits[1];
            out.push_back(Gate::p(g.theta / 2, a));
            out.push_back(Gate::p(g.theta / 2, b));
            out.push_back(Gate::cx(a, b));
            out.push_back(Gate::p(-g.theta / 2, b));
            out.push_back(Gate::cx(a, b));
            return true;
        }
        case GateKind::MCZ:
            expand_mcz(g.qubits, out);
            return true;
        case GateKind::SX:
        case GateKind::RZ:
        case GateKind::CX:
            return false;
    }
    return false;
}

void lower(const Gate &g, const BasisSet &basis, Circuit &out, int budget) {
    if (basis.contains(g.kind)) {
        if (gate_kind_has_angle(g.kind) && g.theta == 0.0) {
            return;
        }
        out.add(g);
        return;
    }
    std::vector<Gate> expansion;
    if (budget == 0 || !rewrite(g, expansion)) {
        throw std::invalid_argument(
            "no decomposition rule takes " + std::string(gate_kind_name(g.kind)) + " into basis {" + basis.str() +
            "}");
    }
    for (const auto &e : expansion) {
        lower(e, basis, out, budget - 1);
    }
}

}  // namespace

Circuit decompose_to_basis(const Circuit &circuit, const BasisSet &basis) {
    Circuit out(circuit.num_qubits());
    for (const auto &g : circuit.gates()) {
        lower(g, basis, out, 8);
    }
    return out;
}

std::set<GateKind> kinds_used(const Circuit &circuit) {
    std::set<GateKind> kinds;
    for (const auto &g : circuit.gates()) {
        kinds.insert(g.kind);
    }
    return kinds;
}

}  // namespace qoracle
