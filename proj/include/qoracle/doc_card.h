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
#include <vector>

#include "json.hpp"
#include "qoracle/circuit.h"
#include "qoracle/depth_analysis.h"
#include "qoracle/oracles.h"
#include "qoracle/simulator.h"

namespace qoracle {

/// Reuse documentation for one built oracle.
///
/// Builder parameters are baked into the circuit when it is generated (the
/// range bounds, the addend). Oracle parameters describe how the finished
/// circuit is applied (which qubits) and do not change the circuit.
struct OracleDocCard {
    struct BlackBox {
        std::string description;
        std::string formal;
        bool operator==(const BlackBox &) const = default;
    };

    struct Component {
        OracleRequest request;
        std::string role;
        bool operator==(const Component &) const = default;
    };

    struct Parameter {
        std::string name;
        int64_t value = 0;
        std::string description;
        bool operator==(const Parameter &) const = default;
    };

    struct OracleParameter {
        std::string name;
        std::string description;
        bool operator==(const OracleParameter &) const = default;
    };

    enum class InputState { Any, Uniform };

    struct Precondition {
        InputState input_state = InputState::Any;
        std::string description;
        bool operator==(const Precondition &) const = default;
    };

    enum class Effect { PhaseMarkInterval, PhaseMarkMask, Displacement, Fourier };

    /// Machine-checkable statement of what happens to an admissible input.
    ///
    /// PhaseMarkInterval flips the sign of x in [begin, end). PhaseMarkMask
    /// flips x with (x & mask) == mask. Displacement sends |x> to
    /// |(x + shift) mod 2^n> keeping the amplitude. Fourier is the DFT.
    struct Postcondition {
        Effect effect = Effect::PhaseMarkInterval;
        uint64_t begin = 0;
        uint64_t end = 0;
        uint64_t mask = 0;
        uint64_t shift = 0;
        std::string description;
        bool operator==(const Postcondition &) const = default;
    };

    enum class UnitaryClass { Diagonal, Permutation, Dense };

    struct DepthEntry {
        size_t n = 0;
        size_t min = 0;
        double median = 0;
        size_t max = 0;
        bool operator==(const DepthEntry &) const = default;
    };

    struct CircuitProperties {
        std::vector<std::string> gate_set;
        std::string basis;
        std::string connectivity;
        UnitaryClass unitary_class = UnitaryClass::Diagonal;
        size_t depth = 0;
        size_t gate_count = 0;
        /// Per qubit count over every sweep interval; range oracles only.
        std::vector<DepthEntry> depth_summary;
        bool operator==(const CircuitProperties &) const = default;
    };

    std::string name;
    OracleId oracle = OracleId::RangeA;
    BlackBox black_box_function;
    std::vector<Component> components;
    std::vector<Parameter> builder_params;
    std::vector<OracleParameter> oracle_params;
    Precondition preconditions;
    Postcondition postconditions;
    CircuitProperties circuit_properties;
    std::string notes;

    /// Rebuilds the builder request from builder_params.
    OracleRequest request() const;

    bool operator==(const OracleDocCard &) const = default;
};

/// Generates the card for `request`. With `sweep_data`, range oracles also
/// carry a per-n depth summary for their implementation.
OracleDocCard generate_card(const OracleRequest &request, const SweepResult *sweep_data = nullptr,
                            const BasisSet &basis = BasisSet::ibm_default());

/// The amplitudes `post` promises for input `in`.
std::vector<std::complex<double>> apply_postcondition(const OracleDocCard::Postcondition &post,
                                                      const StateVector &in);

struct CardCheck {
    std::string claim;
    bool passed = false;
    std::string detail;
};

struct CardReport {
    std::vector<CardCheck> checks;

    bool ok() const;
    std::string to_text() const;
    nlohmann::json to_json() const;
};

inline constexpr size_t CARD_CHECK_QUBIT_CAP = 6;

/// Re-derives every claim on the card by simulation and decomposition.
/// Throws std::invalid_argument when the card's own oracle cannot be built
/// or exceeds CARD_CHECK_QUBIT_CAP.
CardReport check_card(const OracleDocCard &card, double tolerance = 1e-9,
                      const BasisSet &basis = BasisSet::ibm_default());

enum class CardFormat { Json, Markdown };

std::optional<CardFormat> card_format_from_name(std::string_view name);

/// Deterministic rendering.
std::string render(const OracleDocCard &card, CardFormat format);

nlohmann::json card_to_json(const OracleDocCard &card);
/// Strict: unknown or missing fields throw std::invalid_argument.
OracleDocCard card_from_json(const nlohmann::json &j);

}  // namespace qoracle
