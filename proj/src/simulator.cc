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

#include "qoracle/simulator.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace qoracle {

using std::numbers::pi;

namespace {

void check_state_size(size_t n_qubits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("state needs at least one qubit");
    }
    if (n_qubits > STATE_QUBIT_CAP) {
        throw std::invalid_argument(
            "state simulation is capped at " + std::to_string(STATE_QUBIT_CAP) + " qubits, got " +
            std::to_string(n_qubits));
    }
}

std::string bits_of(uint64_t index, size_t n_qubits) {
    std::string s(n_qubits, '0');
    for (size_t k = 0; k < n_qubits; k++) {
        if ((index >> k) & 1) {
            s[n_qubits - 1 - k] = '1';
        }
    }
    return s;
}

}  // namespace

StateVector::StateVector(size_t n_qubits) : n_qubits_(n_qubits) {
    check_state_size(n_qubits);
    amps_.assign(size_t{1} << n_qubits, Amplitude{0, 0});
    amps_[0] = 1;
}

StateVector::StateVector(size_t n_qubits, std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    check_state_size(n_qubits);
    if (amps_.size() != size_t{1} << n_qubits) {
        throw std::invalid_argument(
            "state over " + std::to_string(n_qubits) + " qubits needs " + std::to_string(size_t{1} << n_qubits) +
            " amplitudes, got " + std::to_string(amps_.size()));
    }
}

StateVector StateVector::basis(size_t n_qubits, uint64_t index) {
    StateVector s(n_qubits);
    if (index >= s.dim()) {
        throw std::invalid_argument(
            "basis index " + std::to_string(index) + " out of range for " + std::to_string(n_qubits) + " qubits");
    }
    s.amps_[0] = 0;
    s.amps_[index] = 1;
    return s;
}

StateVector StateVector::uniform(size_t n_qubits) {
    StateVector s(n_qubits);
    double a = 1.0 / std::sqrt(static_cast<double>(s.dim()));
    std::fill(s.amps_.begin(), s.amps_.end(), Amplitude{a, 0});
    return s;
}

double StateVector::norm() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void StateVector::apply_1q(Qubit q, const Amplitude (&m)[2][2]) {
    size_t stride = size_t{1} << q;
    for (size_t base = 0; base < amps_.size(); base += 2 * stride) {
        for (size_t i = base; i < base + stride; i++) {
            Amplitude a0 = amps_[i];
            Amplitude a1 = amps_[i + stride];
            amps_[i] = m[0][0] * a0 + m[0][1] * a1;
            amps_[i + stride] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
}

void StateVector::apply(const Gate &gate) {
    gate.validate(n_qubits_);
    const auto &qs = gate.qubits;
    constexpr Amplitude I{0, 1};
    switch (gate.kind) {
        case GateKind::H: {
            double r = 1 / std::numbers::sqrt2;
            const Amplitude m[2][2] = {{r, r}, {r, -r}};
            apply_1q(qs[0], m);
            return;
        }
        case GateKind::X: {
            size_t bit = size_t{1} << qs[0];
            for (size_t i = 0; i < amps_.size(); i++) {
                if (!(i & bit)) {
                    std::swap(amps_[i], amps_[i | bit]);
                }
            }
            return;
        }
        case GateKind::SX: {
            const Amplitude m[2][2] = {{(1.0 + I) / 2.0, (1.0 - I) / 2.0}, {(1.0 - I) / 2.0, (1.0 + I) / 2.0}};
            apply_1q(qs[0], m);
            return;
        }
        case GateKind::Z:
        case GateKind::P:
        case GateKind::RZ: {
            Amplitude lo = 1;
            Amplitude hi = -1;
            if (gate.kind == GateKind::P) {
                hi = std::polar(1.0, gate.theta);
            } else if (gate.kind == GateKind::RZ) {
                lo = std::polar(1.0, -gate.theta / 2);
                hi = std::polar(1.0, gate.theta / 2);
            }
            size_t bit = size_t{1} << qs[0];
            for (size_t i = 0; i < amps_.size(); i++) {
                amps_[i] *= (i & bit) ? hi : lo;
            }
            return;
        }
        case GateKind::CX: {
            size_t c = size_t{1} << qs[0];
            size_t t = size_t{1} << qs[1];
            for (size_t i = 0; i < amps_.size(); i++) {
                if ((i & c) && !(i & t)) {
                    std::swap(amps_[i], amps_[i | t]);
                }
            }
            return;
        }
        case GateKind::CP:
        case GateKind::MCZ: {
            size_t mask = 0;
            for (auto q : qs) {
                mask |= size_t{1} << q;
            }
            Amplitude phase = gate.kind == GateKind::CP ? std::polar(1.0, gate.theta) : Amplitude{-1, 0};
            for (size_t i = 0; i < amps_.size(); i++) {
                if ((i & mask) == mask) {
                    amps_[i] *= phase;
                }
            }
            return;
        }
    }
}

StateVector uniform_superposition(size_t n_qubits) {
    return StateVector::uniform(n_qubits);
}

StateVector apply_circuit(const Circuit &circuit, const StateVector &state) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument(
            "circuit over " + std::to_string(circuit.num_qubits()) + " qubits applied to a " +
            std::to_string(state.num_qubits()) + "-qubit state");
    }
    StateVector out = state;
    for (const auto &g : circuit.gates()) {
        out.apply(g);
    }
    return out;
}

UnitaryMatrix::UnitaryMatrix(size_t dim) : dim_(dim), data_(dim * dim, Amplitude{0, 0}) {
}

UnitaryMatrix UnitaryMatrix::identity(size_t dim) {
    UnitaryMatrix u(dim);
    for (size_t i = 0; i < dim; i++) {
        u.at(i, i) = 1;
    }
    return u;
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix &rhs) const {
    if (rhs.dim_ != dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    UnitaryMatrix out(dim_);
    for (size_t c = 0; c < dim_; c++) {
        for (size_t k = 0; k < dim_; k++) {
            Amplitude b = rhs.at(k, c);
            if (b == Amplitude{0, 0}) {
                continue;
            }
            for (size_t r = 0; r < dim_; r++) {
                out.at(r, c) += at(r, k) * b;
            }
        }
    }
    return out;
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
    UnitaryMatrix out(dim_);
    for (size_t r = 0; r < dim_; r++) {
        for (size_t c = 0; c < dim_; c++) {
            out.at(c, r) = std::conj(at(r, c));
        }
    }
    return out;
}

double UnitaryMatrix::max_abs_diff(const UnitaryMatrix &other) const {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    double worst = 0;
    for (size_t i = 0; i < data_.size(); i++) {
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    }
    return worst;
}

bool UnitaryMatrix::is_diagonal(double tol) const {
    for (size_t c = 0; c < dim_; c++) {
        for (size_t r = 0; r < dim_; r++) {
            if (r != c && std::abs(at(r, c)) > tol) {
                return false;
            }
        }
    }
    return true;
}

UnitaryMatrix circuit_unitary(const Circuit &circuit, size_t qubit_cap) {
    size_t n = circuit.num_qubits();
    if (n > qubit_cap || n > UNITARY_QUBIT_CAP) {
        throw std::invalid_argument(
            "unitary extraction is capped at " + std::to_string(std::min(qubit_cap, UNITARY_QUBIT_CAP)) +
            " qubits, got " + std::to_string(n));
    }
    size_t dim = size_t{1} << n;
    UnitaryMatrix u(dim);
    for (size_t col = 0; col < dim; col++) {
        auto out = apply_circuit(circuit, StateVector::basis(n, col));
        for (size_t row = 0; row < dim; row++) {
            u.at(row, col) = out[row];
        }
    }
    return u;
}

bool equal_up_to_global_phase(std::span<const Amplitude> a, std::span<const Amplitude> b, double tol) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("cannot compare operands of different dimension");
    }
    size_t pivot = 0;
    for (size_t i = 1; i < b.size(); i++) {
        if (std::abs(b[i]) > std::abs(b[pivot])) {
            pivot = i;
        }
    }
    Amplitude phase = 1;
    if (!b.empty() && std::abs(b[pivot]) > 0 && std::abs(a[pivot]) > 0) {
        phase = a[pivot] / b[pivot];
        phase /= std::abs(phase);
    }
    for (size_t i = 0; i < a.size(); i++) {
        if (std::abs(a[i] - phase * b[i]) > tol) {
            return false;
        }
    }
    return true;
}

bool equal_up_to_global_phase(const UnitaryMatrix &a, const UnitaryMatrix &b, double tol) {
    return equal_up_to_global_phase(a.entries(), b.entries(), tol);
}

bool equal_up_to_global_phase(const StateVector &a, const StateVector &b, double tol) {
    return equal_up_to_global_phase(a.amplitudes(), b.amplitudes(), tol);
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("cannot compare states of different dimension");
    }
    double worst = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

const PhaseEntry *PhaseProfile::find(uint64_t index) const {
    for (const auto &e : entries) {
        if (e.index == index) {
            return &e;
        }
    }
    return nullptr;
}

PhaseProfile phase_profile(const StateVector &state) {
    PhaseProfile profile;
    profile.n_qubits = state.num_qubits();
    Amplitude reference = 0;
    for (size_t i = 0; i < state.dim(); i++) {
        double mag = std::abs(state[i]);
        if (mag <= PhaseProfile::MAGNITUDE_FLOOR) {
            continue;
        }
        if (reference == Amplitude{0, 0}) {
            reference = state[i] / mag;
            profile.entries.push_back({i, mag, 0.0});
            continue;
        }
        double phase = std::arg(state[i] * std::conj(reference));
        // Keep the interval half-open so a sign flip always reads as +pi.
        if (phase <= -pi + 1e-12) {
            phase += 2 * pi;
        }
        profile.entries.push_back({i, mag, phase});
    }
    if (profile.entries.empty()) {
        throw std::invalid_argument("phase profile of the zero vector is undefined");
    }
    return profile;
}

nlohmann::json PhaseProfile::to_json() const {
    auto rows = nlohmann::json::array();
    for (const auto &e : entries) {
        rows.push_back({{"state", e.index}, {"bits", bits_of(e.index, n_qubits)}, {"magnitude", e.magnitude},
                        {"phase", e.phase}});
    }
    return {{"qubits", n_qubits}, {"entries", std::move(rows)}};
}

std::string PhaseProfile::to_table() const {
    std::string out;
    char buf[160];
    int bits_width = std::max<int>(4, static_cast<int>(n_qubits));
    std::snprintf(buf, sizeof(buf), "%6s  %*s  %12s  %12s  %8s\n", "state", bits_width, "bits", "magnitude", "phase",
                  "phase/pi");
    out += buf;
    for (const auto &e : entries) {
        std::snprintf(buf, sizeof(buf), "%6llu  %*s  %12.10f  %12.9f  %8.4f\n", static_cast<unsigned long long>(e.index),
                      bits_width, bits_of(e.index, n_qubits).c_str(), e.magnitude, e.phase, e.phase / pi);
        out += buf;
    }
    return out;
}

nlohmann::json unitary_to_json(const UnitaryMatrix &u) {
    auto rows = nlohmann::json::array();
    for (size_t r = 0; r < u.dim(); r++) {
        auto row = nlohmann::json::array();
        for (size_t c = 0; c < u.dim(); c++) {
            row.push_back({u.at(r, c).real(), u.at(r, c).imag()});
        }
        rows.push_back(std::move(row));
    }
    return {{"dim", u.dim()}, {"rows", std::move(rows)}};
}

std::string unitary_to_table(const UnitaryMatrix &u) {
    auto cell = [](Amplitude a) {
        constexpr double eps = 1e-9;
        double re = std::abs(a.real()) < eps ? 0.0 : a.real();
        double im = std::abs(a.imag()) < eps ? 0.0 : a.imag();
        char buf[48];
        if (im == 0.0) {
            std::snprintf(buf, sizeof(buf), "%.3g", re);
        } else if (re == 0.0) {
            std::snprintf(buf, sizeof(buf), "%.3gi", im);
        } else {
            std::snprintf(buf, sizeof(buf), "%.3g%+.3gi", re, im);
        }
        return std::string(buf);
    };
    std::vector<std::string> cells(u.dim() * u.dim());
    size_t width = 1;
    for (size_t r = 0; r < u.dim(); r++) {
        for (size_t c = 0; c < u.dim(); c++) {
            cells[r * u.dim() + c] = cell(u.at(r, c));
            width = std::max(width, cells[r * u.dim() + c].size());
        }
    }
    std::string out;
    for (size_t r = 0; r < u.dim(); r++) {
        for (size_t c = 0; c < u.dim(); c++) {
            const auto &s = cells[r * u.dim() + c];
            out += std::string(width - s.size() + (c == 0 ? 0 : 2), ' ') + s;
        }
        out += "\n";
    }
    return out;
}

}  // namespace qoracle
