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

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "qoracle/oracles.h"
#include "qoracle/simulator.h"

namespace qoracle {

/// Closed-form matrix an oracle is supposed to implement, computed without
/// building its circuit.
///
/// range-a, less-than and mcz are diagonal sign patterns; range-b sends
/// column x to row (x + n1) mod N with -1 when x < n2 - n1 + 1; add is the
/// shift permutation; qft is the DFT matrix.
UnitaryMatrix expected_unitary(const OracleRequest &request);

enum class VerifyLevel { Unitary, State };

/// `uniform` or `basis:k`.
struct InputChoice {
    bool uniform = true;
    uint64_t basis_index = 0;

    static InputChoice parse(std::string_view text);
    StateVector make(size_t n_qubits) const;
    std::string str() const;
};

struct VerifyReport {
    bool passed = false;
    std::string summary;
    /// First mismatching entry, when any.
    std::string mismatch;
    /// Precondition remarks, e.g. which input was used.
    std::string note;
    /// State level failures: the actual output written as a sum of kets with
    /// absolute (not relative) amplitudes, e.g. "-1|4>".
    std::string output;
    std::optional<PhaseProfile> profile;

    std::string to_text() const;
    nlohmann::json to_json() const;
};

/// Compares circuit_unitary against expected_unitary with no phase allowance.
VerifyReport verify_unitary(const OracleRequest &request, double tol);

/// Applies the oracle to `input` (its documented precondition input when
/// unset) and checks the result against the documented postcondition.
VerifyReport verify_state(const OracleRequest &request, double tol, std::optional<InputChoice> input = std::nullopt);

}  // namespace qoracle
