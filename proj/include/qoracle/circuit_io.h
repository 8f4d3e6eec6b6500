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

#include <string>
#include <string_view>

#include "json.hpp"
#include "qoracle/circuit.h"

namespace qoracle {

/// Line-oriented text form:
///
///     qubits 3
///     H 0
///     CP 1.5707963267948966 0 1
///     MCZ 0 1 2
///
/// Angles are written with 17 significant digits so parsing restores the
/// exact double. Blank lines and lines starting with '#' are ignored.
std::string to_text(const Circuit &circuit);
Circuit parse_text(std::string_view text);

/// {"qubits": N, "gates": [{"kind": "CP", "theta": t, "qubits": [0, 1]}, ...]}
nlohmann::json to_json(const Circuit &circuit);
Circuit circuit_from_json(const nlohmann::json &j);

}  // namespace qoracle
