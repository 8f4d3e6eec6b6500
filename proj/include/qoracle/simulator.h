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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "qoracle/circuit.h"

namespace qoracle {

using Amplitude = std::complex<double>;

inline constexpr size_t STATE_QUBIT_CAP = 20;
inline constexpr size_t UNITARY_QUBIT_CAP = 10;

/// Dense statevector. Basis index bit k is qubit k (qubit 0 least significant),
/// so basis state |i> is the integer i.
class StateVector {
   public:
    /// |0...0>.
    explicit StateVector(size_t n_qubits);
    StateVector(size_t n_qubits, std::vector<Amplitude> amplitudes);

    static StateVector basis(size_t n_qubits, uint64_t index);
    static StateVector uniform(size_t n_qubits);

    size_t num_qubits() const { return n_qubits_; }
    size_t dim() const { return amps_.size(); }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    const Amplitude &operator[](size_t i) const { return amps_[i]; }
    double norm() const;

    void apply(const Gate &gate);

   private:
    void apply_1q(Qubit q, const Amplitude (&m)[2][2]);

    size_t n_qubits_;
    std::vector<Amplitude> amps_;
};

/// (1/sqrt(2^n)) sum_i |i>. Throws for n == 0.
StateVector uniform_superposition(size_t n_qubits);

/// U_circuit * state. Throws on register size mismatch.
StateVector apply_circuit(const Circuit &circuit, const StateVector &state);

/// Column-major N x N matrix; column j is the circuit applied to |j>.
class UnitaryMatrix {
   public:
    explicit UnitaryMatrix(size_t dim);

    size_t dim() const { return dim_; }
    Amplitude &at(size_t row, size_t col) { return data_[col * dim_ + row]; }
    const Amplitude &at(size_t row, size_t col) const { return data_[col * dim_ + row]; }
    std::span<const Amplitude> column(size_t col) const { return {data_.data() + col * dim_, dim_}; }
    std::span<const Amplitude> entries() const { return data_; }

    static UnitaryMatrix identity(size_t dim);
    UnitaryMatrix operator*(const UnitaryMatrix &rhs) const;
    UnitaryMatrix adjoint() const;

    /// Largest |entry - other entry|.
    double max_abs_diff(const UnitaryMatrix &other) const;
    bool is_diagonal(double tol) const;

   private:
    size_t dim_;
    std::vector<Amplitude> data_;
};

UnitaryMatrix circuit_unitary(const Circuit &circuit, size_t qubit_cap = UNITARY_QUBIT_CAP);

/// True iff some unit scalar phi gives max |a - phi b| <= tol. phi is taken
/// from the largest-magnitude entry of b.
bool equal_up_to_global_phase(std::span<const Amplitude> a, std::span<const Amplitude> b, double tol);
bool equal_up_to_global_phase(const UnitaryMatrix &a, const UnitaryMatrix &b, double tol);
bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol);

/// Largest |a_i - b_i| with no phase allowance.
double max_abs_diff(const StateVector &a, const StateVector &b);

struct PhaseEntry {
    uint64_t index;
    double magnitude;
    /// Relative to the first listed entry, in (-pi, pi].
    double phase;
};

/// Basis states with magnitude above MAGNITUDE_FLOOR, in index order.
struct PhaseProfile {
    static constexpr double MAGNITUDE_FLOOR = 1e-12;

    size_t n_qubits = 0;
    std::vector<PhaseEntry> entries;

    const PhaseEntry *find(uint64_t index) const;
    nlohmann::json to_json() const;
    std::string to_table() const;
};

PhaseProfile phase_profile(const StateVector &state);

nlohmann::json unitary_to_json(const UnitaryMatrix &u);
std::string unitary_to_table(const UnitaryMatrix &u);

}  // namespace qoracle
