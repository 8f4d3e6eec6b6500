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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "qoracle/oracles.h"
#include "test_util.h"

using namespace qoracle;
using namespace qtest;
using std::numbers::pi;

TEST(simulator, uniform_superposition) {
    auto s = uniform_superposition(3);
    ASSERT_EQ(s.dim(), 8u);
    for (size_t i = 0; i < 8; i++) {
        ASSERT_NEAR(std::abs(s[i] - Amplitude(1 / std::sqrt(8.0), 0)), 0, 1e-15);
    }
    auto one = uniform_superposition(1);
    ASSERT_NEAR(one[0].real(), 1 / std::sqrt(2.0), 1e-15);
    ASSERT_NEAR(one[1].real(), 1 / std::sqrt(2.0), 1e-15);
    ASSERT_THROW(uniform_superposition(0), std::invalid_argument);
    ASSERT_THROW(uniform_superposition(STATE_QUBIT_CAP + 1), std::invalid_argument);

    for (size_t n = 1; n <= 6; n++) {
        Circuit hs(n);
        for (Qubit q = 0; q < n; q++) {
            hs.add(Gate::h(q));
        }
        ASSERT_LT(max_abs_diff(apply_circuit(hs, StateVector(n)), uniform_superposition(n)), 1e-12);
    }
}

TEST(simulator, apply_circuit_examples) {
    auto out = apply_circuit(less_than({3, 4}), uniform_superposition(3));
    auto profile = phase_profile(out);
    ASSERT_EQ(profile.entries.size(), 8u);
    for (const auto &e : profile.entries) {
        ASSERT_NEAR(e.magnitude, 1 / std::sqrt(8.0), 1e-12);
        // Profile is relative to state 0, which is itself marked.
        ASSERT_NEAR(std::abs(e.phase), e.index < 4 ? 0 : pi, 1e-9);
        ASSERT_NEAR(out[e.index].real(), e.index < 4 ? -1 / std::sqrt(8.0) : 1 / std::sqrt(8.0), 1e-12);
    }

    auto s = uniform_superposition(2);
    ASSERT_LT(max_abs_diff(apply_circuit(Circuit(2), s), s), 1e-15);

    Circuit x0(3);
    x0.add(Gate::x(0));
    ASSERT_LT(max_abs_diff(apply_circuit(x0, StateVector(3)), StateVector::basis(3, 1)), 1e-15);

    ASSERT_THROW(apply_circuit(Circuit(2), StateVector(3)), std::invalid_argument);
    ASSERT_THROW(StateVector::basis(2, 4), std::invalid_argument);
    ASSERT_THROW(StateVector(2, std::vector<Amplitude>(3)), std::invalid_argument);
}

TEST(simulator, gate_kinds_match_written_out_matrices) {
    std::mt19937_64 rng(99);
    for (size_t n = 1; n <= 5; n++) {
        for (int trial = 0; trial < 5; trial++) {
            auto c = random_circuit(n, 20, rng);
            ASSERT_LT(max_diff(circuit_unitary(c), dense_unitary(c)), 1e-10);
        }
    }
}

TEST(simulator, circuit_unitary_examples) {
    auto a = circuit_unitary(range_oracle_a({3, 4, 7}));
    UnitaryMatrix want(8);
    for (size_t i = 0; i < 8; i++) {
        want.at(i, i) = i < 4 ? 1 : -1;
    }
    ASSERT_LT(a.max_abs_diff(want), 1e-12);

    ASSERT_LT(circuit_unitary(Circuit(2)).max_abs_diff(UnitaryMatrix::identity(4)), 1e-15);

    // Brute force: send every basis state through and read off the image.
    auto adder = circuit_unitary(add_const({3, 3}));
    for (size_t x = 0; x < 8; x++) {
        for (size_t r = 0; r < 8; r++) {
            ASSERT_NEAR(std::abs(adder.at(r, x) - Amplitude(r == (x + 3) % 8 ? 1.0 : 0.0, 0)), 0, 1e-9);
        }
    }

    ASSERT_THROW(circuit_unitary(Circuit(11)), std::invalid_argument);
    ASSERT_THROW(circuit_unitary(Circuit(5), 4), std::invalid_argument);
}

TEST(simulator, equal_up_to_global_phase) {
    auto u = circuit_unitary(qft(3));
    UnitaryMatrix neg(u.dim());
    for (size_t r = 0; r < u.dim(); r++) {
        for (size_t c = 0; c < u.dim(); c++) {
            neg.at(r, c) = -u.at(r, c);
        }
    }
    ASSERT_TRUE(equal_up_to_global_phase(u, neg, 1e-12));
    UnitaryMatrix flipped = u;
    flipped.at(5, 2) = -flipped.at(5, 2);
    ASSERT_FALSE(equal_up_to_global_phase(u, flipped, 1e-9));
    ASSERT_THROW(equal_up_to_global_phase(u, UnitaryMatrix(4), 1e-9), std::invalid_argument);

    RangeSpec spec(3, 4, 7);
    auto ua = circuit_unitary(range_oracle_a(spec));
    auto ub = circuit_unitary(range_oracle_b(spec));
    ASSERT_FALSE(equal_up_to_global_phase(ua, ub, 1e-9));
    auto sa = apply_circuit(range_oracle_a(spec), uniform_superposition(3));
    auto sb = apply_circuit(range_oracle_b(spec), uniform_superposition(3));
    ASSERT_TRUE(equal_up_to_global_phase(sa, sb, 1e-9));
}

TEST(simulator, phase_profile) {
    auto c = range_oracle_a({3, 4, 7});
    auto p = phase_profile(apply_circuit(c, uniform_superposition(3)));
    ASSERT_EQ(p.entries.size(), 8u);
    for (const auto &e : p.entries) {
        ASSERT_NEAR(e.magnitude, 1 / std::sqrt(8.0), 1e-10);
        ASSERT_NEAR(e.phase, e.index >= 4 ? pi : 0.0, 1e-9);
    }

    auto zero = phase_profile(StateVector(4));
    ASSERT_EQ(zero.entries.size(), 1u);
    ASSERT_EQ(zero.entries[0].index, 0u);
    ASSERT_EQ(zero.entries[0].phase, 0.0);

    // Brute-force expectation for B on [2, 5].
    auto pb = phase_profile(apply_circuit(range_oracle_b({3, 2, 5}), uniform_superposition(3)));
    for (const auto &e : pb.entries) {
        bool in_range = e.index >= 2 && e.index <= 5;
        ASSERT_NEAR(e.phase, in_range ? pi : 0.0, 1e-9) << e.index;
    }

    ASSERT_THROW(phase_profile(StateVector(2, std::vector<Amplitude>(4))), std::invalid_argument);
}

TEST(simulator, phases_are_reported_in_half_open_interval) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; trial++) {
        auto p = phase_profile(random_state(4, rng));
        ASSERT_EQ(p.entries[0].phase, 0.0);
        for (const auto &e : p.entries) {
            ASSERT_GT(e.phase, -pi);
            ASSERT_LE(e.phase, pi);
        }
    }
}

TEST(simulator, norm_is_preserved_on_every_basis_input) {
    for (size_t n = 3; n <= 5; n++) {
        std::vector<Circuit> built{qft(n), iqft(n), add_const({n, 5}), less_than({n, 6}), range_oracle_a({n, 2, 6}),
                                   range_oracle_b({n, 2, 6}), mcz(n, {0, 1})};
        for (const auto &c : built) {
            for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
                ASSERT_NEAR(apply_circuit(c, StateVector::basis(n, x)).norm(), 1.0, 1e-10);
            }
        }
    }
}

TEST(simulator, built_oracles_are_unitary) {
    for (size_t n = 3; n <= 6; n++) {
        std::vector<Circuit> built{qft(n), add_const({n, 3}), range_oracle_a({n, 1, 6}), range_oracle_b({n, 1, 6})};
        for (const auto &c : built) {
            auto u = circuit_unitary(c);
            ASSERT_LT((u.adjoint() * u).max_abs_diff(UnitaryMatrix::identity(u.dim())), 1e-9);
        }
    }
}

TEST(simulator, linearity) {
    std::mt19937_64 rng(17);
    const Amplitude alpha{0.3, -0.8};
    const Amplitude beta{-1.1, 0.25};
    for (int trial = 0; trial < 10; trial++) {
        auto c = random_circuit(4, 25, rng);
        auto x = random_state(4, rng);
        auto y = random_state(4, rng);
        std::vector<Amplitude> mix(x.dim());
        for (size_t i = 0; i < mix.size(); i++) {
            mix[i] = alpha * x[i] + beta * y[i];
        }
        // StateVector does not renormalize, so the combination is applied as is.
        auto lhs = apply_circuit(c, StateVector(4, mix));
        auto cx = apply_circuit(c, x);
        auto cy = apply_circuit(c, y);
        for (size_t i = 0; i < mix.size(); i++) {
            ASSERT_LT(std::abs(lhs[i] - (alpha * cx[i] + beta * cy[i])), 1e-10);
        }
    }
}

TEST(simulator, composition_multiplies_unitaries) {
    std::mt19937_64 rng(23);
    for (size_t n = 1; n <= 5; n++) {
        auto a = random_circuit(n, 10, rng);
        auto b = random_circuit(n, 10, rng);
        auto lhs = circuit_unitary(compose(a, b));
        auto rhs = circuit_unitary(b) * circuit_unitary(a);
        ASSERT_LT(lhs.max_abs_diff(rhs), 1e-9);
    }
}

TEST(simulator, printing) {
    auto p = phase_profile(apply_circuit(range_oracle_a({3, 4, 7}), uniform_superposition(3)));
    auto table = p.to_table();
    ASSERT_NE(table.find("phase/pi"), std::string::npos);
    ASSERT_NE(table.find("100"), std::string::npos);
    auto j = p.to_json();
    ASSERT_EQ(j["entries"].size(), 8u);
    ASSERT_EQ(j["entries"][4]["bits"], "100");

    auto u = circuit_unitary(less_than({2, 1}));
    ASSERT_EQ(unitary_to_table(u), "-1   0   0   0\n 0   1   0   0\n 0   0   1   0\n 0   0   0   1\n");
    ASSERT_EQ(unitary_to_json(u)["rows"][0][0][0], -1.0);
}
