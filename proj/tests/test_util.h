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

// Test-only reference routines. Nothing here calls the library's simulator:
// gate matrices are written out entry by entry and multiplied densely, so
// they give an independent route to every unitary the tests compare.

#include <cmath>
#include <complex>
#include <cstdint>
#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <random>
#include <vector>

#include "qoracle/circuit.h"
#include "qoracle/simulator.h"

namespace qtest {

using namespace qoracle;

using Complex = std::complex<double>;
/// Row-major dense matrix.
using Dense = std::vector<std::vector<Complex>>;

inline Dense dense_identity(size_t dim) {
    Dense m(dim, std::vector<Complex>(dim, 0.0));
    for (size_t i = 0; i < dim; i++) {
        m[i][i] = 1;
    }
    return m;
}

inline Dense dense_mul(const Dense &a, const Dense &b) {
    size_t dim = a.size();
    Dense out(dim, std::vector<Complex>(dim, 0.0));
    for (size_t r = 0; r < dim; r++) {
        for (size_t k = 0; k < dim; k++) {
            if (a[r][k] == Complex{0, 0}) {
                continue;
            }
            for (size_t c = 0; c < dim; c++) {
                out[r][c] += a[r][k] * b[k][c];
            }
        }
    }
    return out;
}

inline void single_qubit_matrix(const Gate &g, Complex (&m)[2][2]) {
    using std::numbers::pi;
    const Complex i{0, 1};
    double r = 1 / std::sqrt(2.0);
    switch (g.kind) {
        case GateKind::H:
            m[0][0] = r, m[0][1] = r, m[1][0] = r, m[1][1] = -r;
            return;
        case GateKind::X:
            m[0][0] = 0, m[0][1] = 1, m[1][0] = 1, m[1][1] = 0;
            return;
        case GateKind::SX:
            m[0][0] = 0.5 * (1.0 + i), m[0][1] = 0.5 * (1.0 - i), m[1][0] = 0.5 * (1.0 - i), m[1][1] = 0.5 * (1.0 + i);
            return;
        case GateKind::Z:
            m[0][0] = 1, m[0][1] = 0, m[1][0] = 0, m[1][1] = -1;
            return;
        case GateKind::RZ:
            m[0][0] = std::exp(-i * g.theta / 2.0), m[0][1] = 0, m[1][0] = 0, m[1][1] = std::exp(i * g.theta / 2.0);
            return;
        case GateKind::P:
            m[0][0] = 1, m[0][1] = 0, m[1][0] = 0, m[1][1] = std::exp(i * g.theta);
            return;
        default:
            (void)pi;
            throw std::logic_error("not a single-qubit kind");
    }
}

/// Full 2^n x 2^n matrix of one gate, entry by entry.
inline Dense gate_dense(const Gate &g, size_t n) {
    size_t dim = size_t{1} << n;
    Dense m(dim, std::vector<Complex>(dim, 0.0));
    auto bit = [](size_t x, Qubit q) { return (x >> q) & 1; };
    for (size_t c = 0; c < dim; c++) {
        switch (g.kind) {
            case GateKind::CX: {
                size_t r = bit(c, g.qubits[0]) ? c ^ (size_t{1} << g.qubits[1]) : c;
                m[r][c] = 1;
                break;
            }
            case GateKind::CP:
                m[c][c] = bit(c, g.qubits[0]) && bit(c, g.qubits[1]) ? std::polar(1.0, g.theta) : Complex{1, 0};
                break;
            case GateKind::MCZ: {
                bool all = true;
                for (auto q : g.qubits) {
                    all = all && bit(c, q);
                }
                m[c][c] = all ? -1.0 : 1.0;
                break;
            }
            default: {
                Complex u[2][2];
                single_qubit_matrix(g, u);
                Qubit q = g.qubits[0];
                size_t c0 = c & ~(size_t{1} << q);
                for (size_t rb = 0; rb < 2; rb++) {
                    m[c0 | (rb << q)][c] = u[rb][bit(c, q)];
                }
            }
        }
    }
    return m;
}

/// Product of the gate matrices, last gate leftmost.
inline Dense dense_unitary(const Circuit &c) {
    Dense u = dense_identity(size_t{1} << c.num_qubits());
    for (const auto &g : c.gates()) {
        u = dense_mul(gate_dense(g, c.num_qubits()), u);
    }
    return u;
}

inline double max_diff(const UnitaryMatrix &a, const Dense &b) {
    double worst = 0;
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = 0; c < a.dim(); c++) {
            worst = std::max(worst, std::abs(a.at(r, c) - b[r][c]));
        }
    }
    return worst;
}

/// Smallest max |a - e^{i phi} b| over the phase set by the largest entry of b.
inline double phase_aligned_diff(const Dense &a, const Dense &b) {
    size_t pr = 0;
    size_t pc = 0;
    for (size_t r = 0; r < b.size(); r++) {
        for (size_t c = 0; c < b.size(); c++) {
            if (std::abs(b[r][c]) > std::abs(b[pr][pc])) {
                pr = r;
                pc = c;
            }
        }
    }
    Complex phase = a[pr][pc] / b[pr][pc];
    phase /= std::abs(phase);
    double worst = 0;
    for (size_t r = 0; r < b.size(); r++) {
        for (size_t c = 0; c < b.size(); c++) {
            worst = std::max(worst, std::abs(a[r][c] - phase * b[r][c]));
        }
    }
    return worst;
}

/// Random circuit over every gate kind, MCZ included.
inline Circuit random_circuit(size_t n, size_t length, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> kind_dist(0, 8);
    std::uniform_real_distribution<double> angle(-2 * std::numbers::pi, 2 * std::numbers::pi);
    Circuit c(n);
    std::vector<Qubit> all;
    for (Qubit q = 0; q < n; q++) {
        all.push_back(q);
    }
    for (size_t i = 0; i < length; i++) {
        auto kind = static_cast<GateKind>(kind_dist(rng));
        std::shuffle(all.begin(), all.end(), rng);
        size_t arity = gate_kind_arity(kind);
        if (arity == 0) {
            arity = std::uniform_int_distribution<size_t>(1, n)(rng);
        }
        if (arity > n) {
            kind = GateKind::H;
            arity = 1;
        }
        Gate g{kind, std::vector<Qubit>(all.begin(), all.begin() + static_cast<long>(arity))};
        if (gate_kind_has_angle(kind)) {
            g.theta = angle(rng);
        }
        c.add(g);
    }
    return c;
}

inline StateVector random_state(size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    std::vector<Complex> amps(size_t{1} << n);
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

}  // namespace qtest
