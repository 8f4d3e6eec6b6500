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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qoracle/circuit.h"

namespace qoracle {

/// Closed interval [n1, n2] of integers encoded on `n` qubits.
struct RangeSpec {
    size_t n;
    uint64_t n1;
    uint64_t n2;

    /// Throws std::invalid_argument unless 0 <= n1 <= n2 <= 2^n - 1.
    RangeSpec(size_t n, uint64_t n1, uint64_t n2);

    uint64_t dim() const { return uint64_t{1} << n; }
    bool contains(uint64_t x) const { return n1 <= x && x <= n2; }
    /// Strict interior used by the depth sweep: 0 < n1 < n2 < 2^n - 1.
    bool is_sweep_interval() const { return 0 < n1 && n1 < n2 && n2 < dim() - 1; }
    bool operator==(const RangeSpec &) const = default;
};

/// Marks every x < m. Valid for 0 <= m <= 2^n.
struct LessThanSpec {
    size_t n;
    uint64_t m;

    LessThanSpec(size_t n, uint64_t m);
};

/// |x> -> |(x + a) mod 2^n>. `a` is reduced modulo 2^n on construction.
struct AdderSpec {
    size_t n;
    uint64_t a;

    AdderSpec(size_t n, uint64_t a);
};

/// Largest register the builders accept.
inline constexpr size_t BUILDER_QUBIT_CAP = 32;

/// Diagonal gate with -1 exactly where every participant bit is 1. A single
/// participant yields a plain Z.
Circuit mcz(size_t n, const std::vector<Qubit> &participants);

/// diag(d_x) with d_x = -1 iff x < m.
///
/// For each set bit k of m one MCZ over qubits k..n-1 marks the block of x
/// whose bits above k agree with m and whose bit k is 0. Qubits that must read
/// 0 are conjugated with X. m = 0 is the empty circuit; m = 2^n is an explicit
/// global -1 (Z X Z X on qubit 0).
Circuit less_than(const LessThanSpec &spec);

/// Textbook DFT |x> -> N^{-1/2} sum_y exp(2 pi i x y / N) |y>, including the
/// final qubit reversal (as CX triples).
Circuit qft(size_t n);
Circuit iqft(size_t n);

/// Draper constant adder: Fourier transform, one phase rotation per qubit,
/// inverse transform. The trailing zero bits of `a` leave the low qubits
/// untouched, so the transform only spans the qubits at and above the lowest
/// set bit of `a`. The reversal swaps of the two transforms cancel and are
/// omitted.
Circuit add_const(const AdderSpec &spec);

/// less_than(n2 + 1) followed by less_than(n1). Marks [n1, n2] on any input.
Circuit range_oracle_a(const RangeSpec &spec);

/// less_than(n2 - n1 + 1) followed by add_const(n1). Marks [n1, n2] only on
/// the uniform superposition with no relative phases; on other inputs it
/// also displaces amplitudes by n1.
Circuit range_oracle_b(const RangeSpec &spec);

/// Oracle identifiers shared by the CLI, the doc cards and the verifier.
enum class OracleId { MCZ, LessThan, QFT, Add, RangeA, RangeB };

std::string_view oracle_id_name(OracleId id);
std::optional<OracleId> oracle_id_from_name(std::string_view name);

/// Builder parameters for any oracle. Unused fields are ignored by a given id.
struct OracleRequest {
    OracleId id;
    size_t n = 3;
    uint64_t m = 0;
    uint64_t a = 0;
    uint64_t n1 = 0;
    uint64_t n2 = 0;
    /// MCZ participants; empty means every qubit.
    std::vector<Qubit> participants;

    bool operator==(const OracleRequest &) const = default;
};

Circuit build_oracle(const OracleRequest &request);

}  // namespace qoracle
