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

#include "qoracle/doc_card.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include "qoracle/simulator.h"

namespace qoracle {

using nlohmann::json;
using UnitaryClass = OracleDocCard::UnitaryClass;
using InputState = OracleDocCard::InputState;
using Effect = OracleDocCard::Effect;

namespace {

std::string fmt_u(uint64_t v) {
    return std::to_string(v);
}

std::string fmt_median(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

uint64_t mask_of(const std::vector<Qubit> &qs) {
    uint64_t mask = 0;
    for (auto q : qs) {
        mask |= uint64_t{1} << q;
    }
    return mask;
}

std::vector<Qubit> qubits_of(uint64_t mask) {
    std::vector<Qubit> qs;
    for (Qubit q = 0; q < 64; q++) {
        if ((mask >> q) & 1) {
            qs.push_back(q);
        }
    }
    return qs;
}

UnitaryClass expected_class(const OracleRequest &r) {
    switch (r.id) {
        case OracleId::MCZ:
        case OracleId::LessThan:
        case OracleId::RangeA:
            return UnitaryClass::Diagonal;
        case OracleId::Add:
            return AdderSpec(r.n, r.a).a == 0 ? UnitaryClass::Diagonal : UnitaryClass::Permutation;
        case OracleId::RangeB:
            return r.n1 == 0 ? UnitaryClass::Diagonal : UnitaryClass::Permutation;
        case OracleId::QFT:
            return UnitaryClass::Dense;
    }
    return UnitaryClass::Dense;
}

UnitaryClass classify(const UnitaryMatrix &u, double tol) {
    if (u.is_diagonal(tol)) {
        return UnitaryClass::Diagonal;
    }
    for (size_t c = 0; c < u.dim(); c++) {
        size_t nonzero = 0;
        for (auto a : u.column(c)) {
            nonzero += std::abs(a) > tol ? 1 : 0;
        }
        if (nonzero != 1) {
            return UnitaryClass::Dense;
        }
    }
    return UnitaryClass::Permutation;
}

std::string class_name(UnitaryClass c) {
    switch (c) {
        case UnitaryClass::Diagonal:
            return "diagonal";
        case UnitaryClass::Permutation:
            return "permutation-with-phases";
        case UnitaryClass::Dense:
            return "dense";
    }
    return "?";
}

std::string connectivity_of(const Circuit &decomposed) {
    std::set<std::pair<Qubit, Qubit>> pairs;
    for (const auto &g : decomposed.gates()) {
        if (g.qubits.size() == 2) {
            pairs.insert(std::minmax(g.qubits[0], g.qubits[1]));
        }
    }
    size_t n = decomposed.num_qubits();
    size_t all = n * (n - 1) / 2;
    if (pairs.empty()) {
        return "none (single-qubit gates only)";
    }
    if (pairs.size() == all) {
        return "all-to-all (every qubit pair interacts)";
    }
    return "partial (" + std::to_string(pairs.size()) + " of " + std::to_string(all) + " qubit pairs interact)";
}

std::vector<std::string> gate_set_of(const Circuit &decomposed) {
    std::vector<std::string> names;
    for (auto k : kinds_used(decomposed)) {
        names.emplace_back(gate_kind_name(k));
    }
    return names;
}

std::string range_text(uint64_t lo, uint64_t hi) {
    return "[" + fmt_u(lo) + ", " + fmt_u(hi) + "]";
}

OracleDocCard::BlackBox range_black_box(const OracleRequest &r) {
    return {"Phase-marking oracle for a range of integers: a basis state |x> encoding an integer in " +
                range_text(r.n1, r.n2) + " receives a pi phase, every other amplitude is left as it was.",
            "f(x) = -1 if " + fmt_u(r.n1) + " <= x <= " + fmt_u(r.n2) + ", +1 otherwise; U|x> = f(x)|x> for x in [0, " +
                fmt_u((uint64_t{1} << r.n) - 1) + "]"};
}

OracleDocCard::OracleParameter placement_param(size_t n) {
    return {"qubits", "Any " + std::to_string(n) +
                          " qubits of the host register, listed least significant first. The circuit is the same "
                          "wherever it is placed."};
}

OracleDocCard::Parameter param(std::string name, uint64_t value, std::string description) {
    return {std::move(name), static_cast<int64_t>(value), std::move(description)};
}

}  // namespace

OracleRequest OracleDocCard::request() const {
    OracleRequest r{oracle};
    for (const auto &p : builder_params) {
        if (p.value < 0) {
            throw std::invalid_argument("builder parameter " + p.name + " is negative");
        }
        auto v = static_cast<uint64_t>(p.value);
        if (p.name == "n") {
            r.n = v;
        } else if (p.name == "m") {
            r.m = v;
        } else if (p.name == "a") {
            r.a = v;
        } else if (p.name == "n1") {
            r.n1 = v;
        } else if (p.name == "n2") {
            r.n2 = v;
        } else if (p.name == "participants_mask") {
            r.participants = qubits_of(v);
        } else {
            throw std::invalid_argument("unknown builder parameter " + p.name);
        }
    }
    return r;
}

OracleDocCard generate_card(const OracleRequest &request, const SweepResult *sweep_data, const BasisSet &basis) {
    OracleRequest r = request;
    if (r.id == OracleId::MCZ && r.participants.empty()) {
        for (Qubit q = 0; q < r.n; q++) {
            r.participants.push_back(q);
        }
    }
    Circuit circuit = build_oracle(r);
    Circuit decomposed = decompose_to_basis(circuit, basis);
    uint64_t dim = uint64_t{1} << r.n;

    OracleDocCard card;
    card.oracle = r.id;
    card.oracle_params.push_back(placement_param(r.n));
    card.builder_params.push_back(param("n", r.n, "Number of qubits; integers 0 .. 2^n - 1 are encoded."));
    card.preconditions = {InputState::Any, "Any input state on the " + std::to_string(r.n) + " qubits."};

    switch (r.id) {
        case OracleId::RangeA:
        case OracleId::RangeB: {
            bool is_a = r.id == OracleId::RangeA;
            card.name = std::string(is_a ? "Range of integers, implementation A" : "Range of integers, implementation B") +
                        " " + range_text(r.n1, r.n2) + " on " + std::to_string(r.n) + " qubits";
            card.black_box_function = range_black_box(r);
            card.builder_params.push_back(param("n1", r.n1, "Lower bound of the marked range (inclusive)."));
            card.builder_params.push_back(param("n2", r.n2, "Upper bound of the marked range (inclusive)."));
            if (is_a) {
                card.components.push_back({{OracleId::LessThan, r.n, r.n2 + 1}, "Marks every x < n2 + 1."});
                card.components.push_back(
                    {{OracleId::LessThan, r.n, r.n1},
                     "Marks every x < n1 a second time; a doubly marked state returns to phase 0, leaving [n1, n2]. "
                     "The two less-than oracles may be applied in either order."});
            } else {
                card.components.push_back(
                    {{OracleId::LessThan, r.n, r.n2 - r.n1 + 1}, "Marks the first n2 - n1 + 1 states [0, n2 - n1]."});
                card.components.push_back(
                    {{OracleId::Add, r.n, 0, r.n1},
                     "Adds n1 modulo 2^n, displacing the marked block onto [n1, n2]. Must come after the "
                     "less-than oracle."});
                if (r.n1 != 0) {
                    card.preconditions = {
                        InputState::Uniform,
                        "Full uniform superposition (1/sqrt(N)) sum_x |x> with no relative phases. On any other input "
                        "the amplitudes are also displaced by n1, so the range is not marked in place."};
                }
            }
            card.postconditions.effect = Effect::PhaseMarkInterval;
            card.postconditions.begin = r.n1;
            card.postconditions.end = r.n2 + 1;
            card.postconditions.description = "States encoding integers in " + range_text(r.n1, r.n2) +
                                              " carry a pi phase relative to the input; nothing else changes.";
            if (sweep_data != nullptr) {
                for (const auto &row : sweep_data->summary.rows) {
                    const auto &s = is_a ? row.depth_a : row.depth_b;
                    card.circuit_properties.depth_summary.push_back({row.n, s.min, s.median, s.max});
                }
            }
            break;
        }
        case OracleId::LessThan: {
            card.name = "Less-than " + fmt_u(r.m) + " on " + std::to_string(r.n) + " qubits";
            card.black_box_function = {
                "Phase-marking oracle for x < m: every basis state below the threshold receives a pi phase.",
                "f(x) = -1 if x < " + fmt_u(r.m) + ", +1 otherwise; U|x> = f(x)|x>"};
            card.builder_params.push_back(param("m", r.m, "Threshold; states strictly below it are marked."));
            if (r.m < dim) {
                for (size_t k = r.n; k-- > 0;) {
                    if ((r.m >> k) & 1) {
                        OracleRequest part{OracleId::MCZ, r.n};
                        for (size_t q = k; q < r.n; q++) {
                            part.participants.push_back(static_cast<Qubit>(q));
                        }
                        card.components.push_back(
                            {part, "Marks the block of x that agrees with m above bit " + std::to_string(k) +
                                       " and has bit " + std::to_string(k) + " clear (X-conjugated controls)."});
                    }
                }
            }
            card.postconditions.effect = Effect::PhaseMarkInterval;
            card.postconditions.begin = 0;
            card.postconditions.end = r.m;
            card.postconditions.description = "States x < " + fmt_u(r.m) + " carry a pi phase; nothing else changes.";
            break;
        }
        case OracleId::MCZ: {
            uint64_t mask = mask_of(r.participants);
            card.name = "Multi-controlled Z over " + std::to_string(r.participants.size()) + " of " +
                        std::to_string(r.n) + " qubits";
            card.black_box_function = {
                "Symmetric multi-controlled Z: the basis states with every participant qubit set receive a pi "
                "phase.",
                "f(x) = -1 if (x & " + fmt_u(mask) + ") == " + fmt_u(mask) + ", +1 otherwise; U|x> = f(x)|x>"};
            card.builder_params.push_back(
                param("participants_mask", mask, "Bit k set when qubit k takes part in the gate."));
            card.postconditions.effect = Effect::PhaseMarkMask;
            card.postconditions.mask = mask;
            card.postconditions.description =
                "States with all participant qubits set carry a pi phase; nothing else changes.";
            break;
        }
        case OracleId::Add: {
            uint64_t a = AdderSpec(r.n, r.a).a;
            card.name = "Constant addition of " + fmt_u(a) + " modulo 2^" + std::to_string(r.n);
            card.black_box_function = {"Adds a classical constant to the integer held in the register.",
                                       "U|x> = |(x + " + fmt_u(a) + ") mod " + fmt_u(dim) + ">"};
            card.builder_params.push_back(param("a", a, "Addend, reduced modulo 2^n."));
            if (a != 0) {
                size_t low = static_cast<size_t>(std::countr_zero(a));
                card.components.push_back(
                    {{OracleId::QFT, r.n - low},
                     "Fourier transform over the qubits from " + std::to_string(low) +
                         " upward (reversal swaps omitted), then one phase rotation per qubit encoding a, then "
                         "the inverse transform."});
            }
            card.postconditions.effect = Effect::Displacement;
            card.postconditions.shift = a;
            card.postconditions.description =
                "Each amplitude moves from |x> to |(x + " + fmt_u(a) + ") mod " + fmt_u(dim) +
                "> and keeps its phase, for any input state.";
            break;
        }
        case OracleId::QFT: {
            card.name = "Quantum Fourier transform on " + std::to_string(r.n) + " qubits";
            card.black_box_function = {"Discrete Fourier transform of the amplitude vector.",
                                       "U|x> = N^{-1/2} sum_y exp(2 pi i x y / N)|y>, N = " + fmt_u(dim)};
            card.postconditions.effect = Effect::Fourier;
            card.postconditions.description = "The output amplitudes are the DFT of the input amplitudes.";
            break;
        }
    }

    auto &props = card.circuit_properties;
    props.gate_set = gate_set_of(decomposed);
    props.basis = basis.str();
    props.connectivity = connectivity_of(decomposed);
    props.unitary_class = expected_class(r);
    props.depth = depth(decomposed);
    props.gate_count = decomposed.size();
    card.notes = "Generated card. Depth and gate set are measured after decomposition into {" + basis.str() +
                 "} assuming all-to-all connectivity (no routing or SWAP insertion).";
    return card;
}

bool CardReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const CardCheck &c) { return c.passed; });
}

std::string CardReport::to_text() const {
    std::string out;
    for (const auto &c : checks) {
        out += c.passed ? "PASS  " : "FAIL  ";
        out += c.claim;
        if (!c.detail.empty()) {
            out += ": " + c.detail;
        }
        out += "\n";
    }
    return out;
}

json CardReport::to_json() const {
    auto arr = json::array();
    for (const auto &c : checks) {
        arr.push_back({{"claim", c.claim}, {"passed", c.passed}, {"detail", c.detail}});
    }
    return {{"ok", ok()}, {"checks", std::move(arr)}};
}

namespace {

}  // namespace

std::vector<Amplitude> apply_postcondition(const OracleDocCard::Postcondition &post, const StateVector &in) {
    size_t dim = in.dim();
    std::vector<Amplitude> out(dim);
    switch (post.effect) {
        case Effect::PhaseMarkInterval:
            for (size_t x = 0; x < dim; x++) {
                out[x] = (post.begin <= x && x < post.end) ? -in[x] : in[x];
            }
            break;
        case Effect::PhaseMarkMask:
            for (size_t x = 0; x < dim; x++) {
                out[x] = (x & post.mask) == post.mask ? -in[x] : in[x];
            }
            break;
        case Effect::Displacement:
            for (size_t x = 0; x < dim; x++) {
                out[(x + post.shift) % dim] = in[x];
            }
            break;
        case Effect::Fourier: {
            double scale = 1 / std::sqrt(static_cast<double>(dim));
            for (size_t y = 0; y < dim; y++) {
                Amplitude acc = 0;
                for (size_t x = 0; x < dim; x++) {
                    double angle = 2 * std::numbers::pi * static_cast<double>((x * y) % dim) / static_cast<double>(dim);
                    acc += std::polar(1.0, angle) * in[x];
                }
                out[y] = acc * scale;
            }
            break;
        }
    }
    return out;
}

namespace {

std::string describe_amp(Amplitude a) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g%+.6gi", a.real(), a.imag());
    return buf;
}

StateVector random_state(size_t n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<Amplitude> amps(size_t{1} << n);
    double total = 0;
    for (auto &a : amps) {
        a = {gauss(rng), gauss(rng)};
        total += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(total);
    }
    return StateVector(n, std::move(amps));
}

}  // namespace

CardReport check_card(const OracleDocCard &card, double tolerance, const BasisSet &basis) {
    OracleRequest request = card.request();
    Circuit circuit = [&] {
        try {
            return build_oracle(request);
        } catch (const std::invalid_argument &e) {
            throw std::invalid_argument("card references an unbuildable oracle: " + std::string(e.what()));
        }
    }();
    size_t n = circuit.num_qubits();
    if (n > CARD_CHECK_QUBIT_CAP) {
        throw std::invalid_argument(
            "card checks simulate at most " + std::to_string(CARD_CHECK_QUBIT_CAP) + " qubits, card has " +
            std::to_string(n));
    }
    CardReport report;

    {
        CardCheck c{"components resolve to builders", true, ""};
        for (const auto &comp : card.components) {
            try {
                build_oracle(comp.request);
            } catch (const std::invalid_argument &e) {
                c.passed = false;
                c.detail = std::string(oracle_id_name(comp.request.id)) + ": " + e.what();
                break;
            }
        }
        report.checks.push_back(c);
    }

    UnitaryMatrix u = circuit_unitary(circuit);
    UnitaryClass actual = classify(u, tolerance);
    {
        const auto claimed = card.circuit_properties.unitary_class;
        report.checks.push_back({"unitary class", claimed == actual,
                                 "card says " + class_name(claimed) + ", simulation gives " + class_name(actual)});
    }
    {
        bool documented = !card.preconditions.description.empty();
        report.checks.push_back(
            {"preconditions documented", documented || actual == UnitaryClass::Diagonal,
             documented ? "" : "non-diagonal oracle without a documented precondition"});
    }
    {
        std::vector<std::pair<std::string, StateVector>> inputs;
        inputs.emplace_back("uniform superposition", StateVector::uniform(n));
        if (card.preconditions.input_state == InputState::Any) {
            for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
                inputs.emplace_back("basis |" + fmt_u(x) + ">", StateVector::basis(n, x));
            }
            inputs.emplace_back("random state (seed 1)", random_state(n, 1));
            inputs.emplace_back("random state (seed 2)", random_state(n, 2));
        }
        CardCheck c{"postcondition on admissible inputs", true,
                    std::to_string(inputs.size()) + " input(s) checked"};
        for (const auto &[label, in] : inputs) {
            auto got = apply_circuit(circuit, in);
            auto want = apply_postcondition(card.postconditions, in);
            for (size_t i = 0; i < want.size(); i++) {
                if (std::abs(got[i] - want[i]) > tolerance) {
                    c.passed = false;
                    c.detail = label + ": amplitude of |" + fmt_u(i) + "> is " + describe_amp(got[i]) +
                               ", postcondition expects " + describe_amp(want[i]);
                    break;
                }
            }
            if (!c.passed) {
                break;
            }
        }
        report.checks.push_back(c);
    }

    Circuit decomposed = decompose_to_basis(circuit, basis);
    {
        auto actual_set = gate_set_of(decomposed);
        report.checks.push_back({"gate set", actual_set == card.circuit_properties.gate_set, ""});
    }
    {
        size_t d = depth(decomposed);
        bool same = d == card.circuit_properties.depth && decomposed.size() == card.circuit_properties.gate_count;
        report.checks.push_back({"depth", same,
                                 "card says depth " + std::to_string(card.circuit_properties.depth) + " / " +
                                     std::to_string(card.circuit_properties.gate_count) + " gates, recomputed " +
                                     std::to_string(d) + " / " + std::to_string(decomposed.size())});
    }
    bool is_a = card.oracle == OracleId::RangeA;
    for (const auto &entry : card.circuit_properties.depth_summary) {
        CardCheck c{"depth summary n=" + std::to_string(entry.n), true, ""};
        if (entry.n > CARD_CHECK_QUBIT_CAP || entry.n < 3) {
            c.detail = "not recomputed outside [3, " + std::to_string(CARD_CHECK_QUBIT_CAP) + "] qubits";
        } else {
            auto fresh = sweep(entry.n, entry.n, basis);
            const auto &row = fresh.summary.rows.at(0);
            const auto &s = is_a ? row.depth_a : row.depth_b;
            c.passed = s.min == entry.min && s.median == entry.median && s.max == entry.max;
            c.detail = "card " + std::to_string(entry.min) + "/" + fmt_median(entry.median) + "/" +
                       std::to_string(entry.max) + ", recomputed " + std::to_string(s.min) + "/" +
                       fmt_median(s.median) + "/" + std::to_string(s.max) + " (min/median/max)";
        }
        report.checks.push_back(c);
    }
    return report;
}

std::optional<CardFormat> card_format_from_name(std::string_view name) {
    if (name == "json") {
        return CardFormat::Json;
    }
    if (name == "markdown" || name == "md") {
        return CardFormat::Markdown;
    }
    return std::nullopt;
}

namespace {

std::string input_state_name(InputState s) {
    return s == InputState::Any ? "any" : "uniform";
}

std::string effect_name(Effect e) {
    switch (e) {
        case Effect::PhaseMarkInterval:
            return "phase-mark-interval";
        case Effect::PhaseMarkMask:
            return "phase-mark-mask";
        case Effect::Displacement:
            return "displacement";
        case Effect::Fourier:
            return "fourier";
    }
    return "?";
}

json request_params(const OracleRequest &r) {
    switch (r.id) {
        case OracleId::MCZ:
            return {{"n", r.n}, {"participants", r.participants}};
        case OracleId::LessThan:
            return {{"n", r.n}, {"m", r.m}};
        case OracleId::QFT:
            return {{"n", r.n}};
        case OracleId::Add:
            return {{"n", r.n}, {"a", r.a}};
        case OracleId::RangeA:
        case OracleId::RangeB:
            return {{"n", r.n}, {"n1", r.n1}, {"n2", r.n2}};
    }
    return json::object();
}

/// Throws unless `j` is an object whose keys are exactly `keys`.
void expect_keys(const json &j, std::initializer_list<std::string_view> keys, const std::string &where) {
    if (!j.is_object()) {
        throw std::invalid_argument(where + ": expected an object");
    }
    for (auto k : keys) {
        if (!j.contains(std::string(k))) {
            throw std::invalid_argument(where + ": missing field '" + std::string(k) + "'");
        }
    }
    for (const auto &[k, v] : j.items()) {
        if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
            throw std::invalid_argument(where + ": unknown field '" + k + "'");
        }
    }
}

OracleRequest request_from_params(OracleId id, const json &p) {
    OracleRequest r{id};
    switch (id) {
        case OracleId::MCZ:
            expect_keys(p, {"n", "participants"}, "component params");
            r.participants = p.at("participants").get<std::vector<Qubit>>();
            break;
        case OracleId::LessThan:
            expect_keys(p, {"n", "m"}, "component params");
            r.m = p.at("m").get<uint64_t>();
            break;
        case OracleId::QFT:
            expect_keys(p, {"n"}, "component params");
            break;
        case OracleId::Add:
            expect_keys(p, {"n", "a"}, "component params");
            r.a = p.at("a").get<uint64_t>();
            break;
        case OracleId::RangeA:
        case OracleId::RangeB:
            expect_keys(p, {"n", "n1", "n2"}, "component params");
            r.n1 = p.at("n1").get<uint64_t>();
            r.n2 = p.at("n2").get<uint64_t>();
            break;
    }
    r.n = p.at("n").get<size_t>();
    return r;
}

OracleId parse_oracle_id(const json &j) {
    auto name = j.get<std::string>();
    auto id = oracle_id_from_name(name);
    if (!id) {
        throw std::invalid_argument("unknown oracle '" + name + "'");
    }
    return *id;
}

}  // namespace

json card_to_json(const OracleDocCard &card) {
    json j;
    j["schema"] = "qoracle.doc-card/1";
    j["name"] = card.name;
    j["oracle"] = oracle_id_name(card.oracle);
    j["black_box_function"] = {{"description", card.black_box_function.description},
                               {"formal", card.black_box_function.formal}};
    j["components"] = json::array();
    for (const auto &c : card.components) {
        j["components"].push_back(
            {{"oracle", oracle_id_name(c.request.id)}, {"params", request_params(c.request)}, {"role", c.role}});
    }
    j["builder_params"] = json::array();
    for (const auto &p : card.builder_params) {
        j["builder_params"].push_back({{"name", p.name}, {"value", p.value}, {"description", p.description}});
    }
    j["oracle_params"] = json::array();
    for (const auto &p : card.oracle_params) {
        j["oracle_params"].push_back({{"name", p.name}, {"description", p.description}});
    }
    j["preconditions"] = {{"input_state", input_state_name(card.preconditions.input_state)},
                          {"description", card.preconditions.description}};
    const auto &post = card.postconditions;
    j["postconditions"] = {{"effect", effect_name(post.effect)}, {"begin", post.begin}, {"end", post.end},
                           {"mask", post.mask}, {"shift", post.shift}, {"description", post.description}};
    const auto &props = card.circuit_properties;
    json summary = json::array();
    for (const auto &e : props.depth_summary) {
        summary.push_back({{"n", e.n}, {"min", e.min}, {"median", e.median}, {"max", e.max}});
    }
    j["circuit_properties"] = {{"gate_set", props.gate_set},
                               {"basis", props.basis},
                               {"connectivity", props.connectivity},
                               {"unitary_class", class_name(props.unitary_class)},
                               {"depth", props.depth},
                               {"gate_count", props.gate_count},
                               {"depth_summary", std::move(summary)}};
    j["notes"] = card.notes;
    return j;
}

OracleDocCard card_from_json(const json &j) {
    try {
        expect_keys(j,
                    {"schema", "name", "oracle", "black_box_function", "components", "builder_params",
                     "oracle_params", "preconditions", "postconditions", "circuit_properties", "notes"},
                    "card");
        if (j.at("schema") != "qoracle.doc-card/1") {
            throw std::invalid_argument("unsupported card schema " + j.at("schema").dump());
        }
        OracleDocCard card;
        card.name = j.at("name").get<std::string>();
        card.oracle = parse_oracle_id(j.at("oracle"));

        const auto &bb = j.at("black_box_function");
        expect_keys(bb, {"description", "formal"}, "black_box_function");
        card.black_box_function = {bb.at("description").get<std::string>(), bb.at("formal").get<std::string>()};

        for (const auto &c : j.at("components")) {
            expect_keys(c, {"oracle", "params", "role"}, "component");
            card.components.push_back(
                {request_from_params(parse_oracle_id(c.at("oracle")), c.at("params")), c.at("role").get<std::string>()});
        }
        for (const auto &p : j.at("builder_params")) {
            expect_keys(p, {"name", "value", "description"}, "builder_params entry");
            card.builder_params.push_back(
                {p.at("name").get<std::string>(), p.at("value").get<int64_t>(), p.at("description").get<std::string>()});
        }
        for (const auto &p : j.at("oracle_params")) {
            expect_keys(p, {"name", "description"}, "oracle_params entry");
            card.oracle_params.push_back({p.at("name").get<std::string>(), p.at("description").get<std::string>()});
        }

        const auto &pre = j.at("preconditions");
        expect_keys(pre, {"input_state", "description"}, "preconditions");
        auto input = pre.at("input_state").get<std::string>();
        if (input == "any") {
            card.preconditions.input_state = InputState::Any;
        } else if (input == "uniform") {
            card.preconditions.input_state = InputState::Uniform;
        } else {
            throw std::invalid_argument("unknown input_state '" + input + "'");
        }
        card.preconditions.description = pre.at("description").get<std::string>();

        const auto &post = j.at("postconditions");
        expect_keys(post, {"effect", "begin", "end", "mask", "shift", "description"}, "postconditions");
        auto effect = post.at("effect").get<std::string>();
        bool known = false;
        for (auto e : {Effect::PhaseMarkInterval, Effect::PhaseMarkMask, Effect::Displacement, Effect::Fourier}) {
            if (effect_name(e) == effect) {
                card.postconditions.effect = e;
                known = true;
            }
        }
        if (!known) {
            throw std::invalid_argument("unknown postcondition effect '" + effect + "'");
        }
        card.postconditions.begin = post.at("begin").get<uint64_t>();
        card.postconditions.end = post.at("end").get<uint64_t>();
        card.postconditions.mask = post.at("mask").get<uint64_t>();
        card.postconditions.shift = post.at("shift").get<uint64_t>();
        card.postconditions.description = post.at("description").get<std::string>();

        const auto &props = j.at("circuit_properties");
        expect_keys(props, {"gate_set", "basis", "connectivity", "unitary_class", "depth", "gate_count", "depth_summary"},
                    "circuit_properties");
        auto &cp = card.circuit_properties;
        cp.gate_set = props.at("gate_set").get<std::vector<std::string>>();
        cp.basis = props.at("basis").get<std::string>();
        cp.connectivity = props.at("connectivity").get<std::string>();
        auto cls = props.at("unitary_class").get<std::string>();
        known = false;
        for (auto c : {UnitaryClass::Diagonal, UnitaryClass::Permutation, UnitaryClass::Dense}) {
            if (class_name(c) == cls) {
                cp.unitary_class = c;
                known = true;
            }
        }
        if (!known) {
            throw std::invalid_argument("unknown unitary_class '" + cls + "'");
        }
        cp.depth = props.at("depth").get<size_t>();
        cp.gate_count = props.at("gate_count").get<size_t>();
        for (const auto &e : props.at("depth_summary")) {
            expect_keys(e, {"n", "min", "median", "max"}, "depth_summary entry");
            cp.depth_summary.push_back(
                {e.at("n").get<size_t>(), e.at("min").get<size_t>(), e.at("median").get<double>(), e.at("max").get<size_t>()});
        }
        card.notes = j.at("notes").get<std::string>();
        return card;
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed card JSON: ") + e.what());
    }
}

namespace {

std::string render_markdown(const OracleDocCard &card) {
    std::string out = "# " + card.name + "\n\n";
    out += "Oracle: `" + std::string(oracle_id_name(card.oracle)) + "`\n\n";

    out += "## Black Box\n\n" + card.black_box_function.description + "\n\n";
    out += "    " + card.black_box_function.formal + "\n\n";

    out += "## Components\n\n";
    if (card.components.empty()) {
        out += "None; built directly from primitive gates.\n\n";
    }
    for (const auto &c : card.components) {
        out += "- `" + std::string(oracle_id_name(c.request.id)) + "` " + request_params(c.request).dump() + ": " +
               c.role + "\n";
    }
    if (!card.components.empty()) {
        out += "\n";
    }

    out += "## Parameters\n\n### Builder parameters (fixed when the circuit is generated)\n\n";
    out += "| name | value | description |\n|---|---|---|\n";
    for (const auto &p : card.builder_params) {
        out += "| " + p.name + " | " + std::to_string(p.value) + " | " + p.description + " |\n";
    }
    out += "\n### Oracle parameters (chosen when the circuit is applied)\n\n";
    for (const auto &p : card.oracle_params) {
        out += "- **" + p.name + "**: " + p.description + "\n";
    }
    out += "\n";

    out += "## Pre\n\nInput state: **" + input_state_name(card.preconditions.input_state) + "**. " +
           card.preconditions.description + "\n\n";
    out += "## Post\n\n" + card.postconditions.description + "\n\n";

    const auto &props = card.circuit_properties;
    out += "## Circuit Properties\n\n";
    std::string gates;
    for (const auto &g : props.gate_set) {
        gates += (gates.empty() ? "" : ", ") + g;
    }
    out += "- Gate set used: " + gates + " (target basis " + props.basis + ")\n";
    out += "- Connectivity: " + props.connectivity + "\n";
    out += "- Unitary: " + class_name(props.unitary_class) + "\n";
    out += "- Depth: " + std::to_string(props.depth) + " (" + std::to_string(props.gate_count) + " gates)\n";
    if (!props.depth_summary.empty()) {
        out += "\n| n | min depth | median depth | max depth |\n|---|---|---|---|\n";
        for (const auto &e : props.depth_summary) {
            out += "| " + std::to_string(e.n) + " | " + std::to_string(e.min) + " | " + fmt_median(e.median) + " | " +
                   std::to_string(e.max) + " |\n";
        }
    }
    out += "\n## Notes\n\n" + card.notes + "\n";
    return out;
}

}  // namespace

std::string render(const OracleDocCard &card, CardFormat format) {
    switch (format) {
        case CardFormat::Json:
            return card_to_json(card).dump(2) + "\n";
        case CardFormat::Markdown:
            return render_markdown(card);
    }
    throw std::invalid_argument("unknown card format");
}

}  // namespace qoracle
