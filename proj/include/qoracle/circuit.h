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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qoracle {

using Qubit = uint32_t;

enum class GateKind : uint8_t { H, X, SX, Z, RZ, P, CX, CP, MCZ };

/// Canonical upper-case mnemonic ("H", "RZ", "MCZ", ...).
std::string_view gate_kind_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
bool gate_kind_has_angle(GateKind kind);

/// Number of operands the kind takes, or 0 for the variadic MCZ.
size_t gate_kind_arity(GateKind kind);

/// One gate instance. `theta` is only meaningful for RZ, P and CP.
///
/// For CX the operands are (control, target). For CP and MCZ the operands are
/// symmetric participants.
struct Gate {
    GateKind kind;
    std::vector<Qubit> qubits;
    double theta = 0.0;

    static Gate h(Qubit q);
    static Gate x(Qubit q);
    static Gate sx(Qubit q);
    static Gate z(Qubit q);
    static Gate rz(double theta, Qubit q);
    static Gate p(double theta, Qubit q);
    static Gate cx(Qubit control, Qubit target);
    static Gate cp(double theta, Qubit a, Qubit b);
    static Gate mcz(std::vector<Qubit> participants);

    /// Throws std::invalid_argument when the gate is malformed or does not fit
    /// in a register of `n_qubits`.
    void validate(size_t n_qubits) const;

    bool operator==(const Gate &other) const = default;
};

/// An ordered gate sequence over a fixed register.
///
/// Every gate stored in a circuit has passed Gate::validate for the circuit's
/// register size, so downstream passes can index amplitudes without checks.
class Circuit {
   public:
    explicit Circuit(size_t n_qubits);
    Circuit(size_t n_qubits, std::vector<Gate> gates);

    size_t num_qubits() const { return n_qubits_; }
    const std::vector<Gate> &gates() const { return gates_; }
    size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }

    /// In-place append used by builders.
    Circuit &add(Gate gate);
    Circuit &extend(const Circuit &other);

    bool operator==(const Circuit &other) const = default;

   private:
    size_t n_qubits_;
    std::vector<Gate> gates_;
};

/// Returns a copy of `circuit` with `gate` appended.
Circuit append(const Circuit &circuit, Gate gate);

/// `first` followed by `second`; the unitary is U_second * U_first.
Circuit compose(const Circuit &first, const Circuit &second);

/// Layer count under as-soon-as-possible scheduling.
size_t depth(const Circuit &circuit);

/// Applies `mapping[q]` to every operand. `mapping` must be a permutation of
/// the register.
Circuit relabel(const Circuit &circuit, const std::vector<Qubit> &mapping);

/// The kinds a target device executes natively.
class BasisSet {
   public:
    BasisSet(std::initializer_list<GateKind> kinds);
    explicit BasisSet(std::set<GateKind> kinds);

    /// {CX, RZ, SX, X}.
    static BasisSet ibm_default();
    /// Parses a whitespace or comma separated list of mnemonics.
    static BasisSet parse(std::string_view text);

    bool contains(GateKind kind) const { return kinds_.count(kind) != 0; }
    const std::set<GateKind> &kinds() const { return kinds_; }
    std::string str() const;

    bool operator==(const BasisSet &other) const = default;

   private:
    std::set<GateKind> kinds_;
};

/// Rewrites every gate outside `basis` with its registered rule, recursively.
///
/// The result equals the input up to one global phase factor. Routing is not
/// performed: two-qubit gates may act on any pair. Throws std::invalid_argument
/// when a gate kind has no rule reaching the basis.
Circuit decompose_to_basis(const Circuit &circuit, const BasisSet &basis = BasisSet::ibm_default());

/// The set of kinds that actually occur in `circuit`.
std::set<GateKind> kinds_used(const Circuit &circuit);

}  // namespace qoracle
