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

#include "qoracle/verify.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "qoracle/doc_card.h"

namespace qoracle {

namespace {

std::string amp_text(Amplitude a) {
    auto clean = [](double v) { return std::abs(v) < 1e-12 ? 0.0 : v; };
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g%+.9gi", clean(a.real()), clean(a.imag()));
    return buf;
}

std::string ket_sum(const StateVector &s, double tol) {
    constexpr size_t max_terms = 16;
    std::string out;
    size_t terms = 0;
    for (size_t i = 0; i < s.dim(); i++) {
        Amplitude a = s[i];
        if (std::abs(a) <= tol) {
            continue;
        }
        if (terms == max_terms) {
            return out + " + ...";
        }
        char buf[96];
        if (std::abs(a.imag()) <= tol) {
            std::snprintf(buf, sizeof(buf), "%s%.6g|%zu>", terms == 0 ? "" : " + ", a.real(), i);
        } else {
            std::snprintf(buf, sizeof(buf), "%s(%s)|%zu>", terms == 0 ? "" : " + ", amp_text(a).c_str(), i);
        }
        out += buf;
        terms++;
    }
    return out;
}

}  // namespace

UnitaryMatrix expected_unitary(const OracleRequest &r) {
    if (r.n > UNITARY_QUBIT_CAP) {
        throw std::invalid_argument("unitary verification is capped at " + std::to_string(UNITARY_QUBIT_CAP) + " qubits");
    }
    uint64_t dim = uint64_t{1} << r.n;
    UnitaryMatrix u(dim);
    auto sign = [](bool marked) { return marked ? -1.0 : 1.0; };
    switch (r.id) {
        case OracleId::RangeA: {
            RangeSpec s(r.n, r.n1, r.n2);
            for (uint64_t x = 0; x < dim; x++) {
                u.at(x, x) = sign(s.contains(x));
            }
            break;
        }
        case OracleId::RangeB: {
            RangeSpec s(r.n, r.n1, r.n2);
            uint64_t width = s.n2 - s.n1 + 1;
            for (uint64_t x = 0; x < dim; x++) {
                u.at((x + s.n1) % dim, x) = sign(x < width);
            }
            break;
        }
        case OracleId::LessThan: {
            LessThanSpec s(r.n, r.m);
            for (uint64_t x = 0; x < dim; x++) {
                u.at(x, x) = sign(x < s.m);
            }
            break;
        }
        case OracleId::MCZ: {
            uint64_t mask = 0;
            if (r.participants.empty()) {
                mask = dim - 1;
            }
            for (auto q : r.participants) {
                if (q >= r.n) {
                    throw std::invalid_argument("mcz participant out of range");
                }
                mask |= uint64_t{1} << q;
            }
            for (uint64_t x = 0; x < dim; x++) {
                u.at(x, x) = sign((x & mask) == mask);
            }
            break;
        }
        case OracleId::Add: {
            AdderSpec s(r.n, r.a);
            for (uint64_t x = 0; x < dim; x++) {
                u.at((x + s.a) % dim, x) = 1;
            }
            break;
        }
        case OracleId::QFT: {
            double scale = 1 / std::sqrt(static_cast<double>(dim));
            for (uint64_t x = 0; x < dim; x++) {
                for (uint64_t y = 0; y < dim; y++) {
                    double angle =
                        2 * std::numbers::pi * static_cast<double>((x * y) % dim) / static_cast<double>(dim);
                    u.at(y, x) = std::polar(scale, angle);
                }
            }
            break;
        }
    }
    return u;
}

InputChoice InputChoice::parse(std::string_view text) {
    if (text == "uniform") {
        return {};
    }
    constexpr std::string_view prefix = "basis:";
    if (text.substr(0, prefix.size()) == prefix && text.size() > prefix.size()) {
        std::string digits(text.substr(prefix.size()));
        if (digits.find_first_not_of("0123456789") == std::string::npos) {
            try {
                return {false, std::stoull(digits)};
            } catch (const std::out_of_range &) {
            }
        }
    }
    throw std::invalid_argument("input must be 'uniform' or 'basis:K', got '" + std::string(text) + "'");
}

StateVector InputChoice::make(size_t n_qubits) const {
    return uniform ? StateVector::uniform(n_qubits) : StateVector::basis(n_qubits, basis_index);
}

std::string InputChoice::str() const {
    return uniform ? "uniform" : "basis:" + std::to_string(basis_index);
}

std::string VerifyReport::to_text() const {
    std::string out = std::string(passed ? "PASS" : "FAIL") + ": " + summary + "\n";
    if (!note.empty()) {
        out += "note: " + note + "\n";
    }
    if (!mismatch.empty()) {
        out += "first mismatch: " + mismatch + "\n";
    }
    if (!output.empty()) {
        out += "actual output: " + output + "\n";
    }
    if (profile) {
        out += profile->to_table();
    }
    return out;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json j{{"passed", passed}, {"summary", summary}, {"note", note}, {"mismatch", mismatch}};
    if (!output.empty()) {
        j["output"] = output;
    }
    if (profile) {
        j["profile"] = profile->to_json();
    }
    return j;
}

VerifyReport verify_unitary(const OracleRequest &request, double tol) {
    auto expected = expected_unitary(request);
    auto actual = circuit_unitary(build_oracle(request));
    VerifyReport report;
    double worst = 0;
    for (size_t c = 0; c < expected.dim(); c++) {
        for (size_t r = 0; r < expected.dim(); r++) {
            double d = std::abs(actual.at(r, c) - expected.at(r, c));
            worst = std::max(worst, d);
            if (d > tol && report.mismatch.empty()) {
                report.mismatch = "entry (" + std::to_string(r) + ", " + std::to_string(c) + "): expected " +
                                  amp_text(expected.at(r, c)) + ", got " + amp_text(actual.at(r, c));
            }
        }
    }
    report.passed = report.mismatch.empty();
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s unitary (%zux%zu) vs closed form, max deviation %.3g, tolerance %.3g",
                  std::string(oracle_id_name(request.id)).c_str(), expected.dim(), expected.dim(), worst, tol);
    report.summary = buf;
    return report;
}

VerifyReport verify_state(const OracleRequest &request, double tol, std::optional<InputChoice> input) {
    auto card = generate_card(request);
    Circuit circuit = build_oracle(request);
    size_t n = circuit.num_qubits();
    bool needs_uniform = card.preconditions.input_state == OracleDocCard::InputState::Uniform;

    VerifyReport report;
    InputChoice choice = input.value_or(InputChoice{});
    if (!input) {
        report.note = "precondition input used: uniform superposition";
    } else if (needs_uniform && !choice.uniform) {
        report.note = "input " + choice.str() +
                      " violates the documented precondition (uniform superposition without relative phases)";
    } else {
        report.note = "input " + choice.str();
    }
    StateVector in = choice.make(n);
    StateVector out = apply_circuit(circuit, in);
    auto want = apply_postcondition(card.postconditions, in);
    for (size_t i = 0; i < want.size(); i++) {
        if (std::abs(out[i] - want[i]) > tol) {
            report.mismatch =
                "state |" + std::to_string(i) + ">: expected " + amp_text(want[i]) + ", got " + amp_text(out[i]);
            break;
        }
    }
    report.passed = report.mismatch.empty();
    if (!report.passed) {
        report.output = ket_sum(out, tol);
    }
    report.summary = std::string(oracle_id_name(request.id)) + " on " + choice.str() + " input: " +
                     card.postconditions.description;
    report.profile = phase_profile(out);
    return report;
}

}  // namespace qoracle
