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

#include "qoracle/oracles.h"

#include <array>
#include <bit>
#include <numbers>
#include <stdexcept>

namespace qoracle {

using std::numbers::pi;

namespace {

void check_register(size_t n) {
    if (n == 0 || n > BUILDER_QUBIT_CAP) {
        throw std::invalid_argument(
            "qubit count must be in [1, " + std::to_string(BUILDER_QUBIT_CAP) + "], got " + std::to_string(n));
    }
}

/// Transform without the final reversal over `reg` (reg[0] least significant).
/// Leaves the Fourier coefficient of y in bit-reversed order.
void append_qft_core(Circuit &c, const std::vector<Qubit> &reg) {
    for (size_t j = reg.size(); j-- > 0;) {
        c.add(Gate::h(reg[j]));
        for (size_t k = j; k-- > 0;) {
            c.add(Gate::cp(pi / static_cast<double>(uint64_t{1} << (j - k)), reg[k], reg[j]));
        }
    }
}

void append_iqft_core(Circuit &c, const std::vector<Qubit> &reg) {
    for (size_t j = 0; j < reg.size(); j++) {
        for (size_t k = 0; k < j; k++) {
            c.add(Gate::cp(-pi / static_cast<double>(uint64_t{1} << (j - k)), reg[k], reg[j]));
        }
        c.add(Gate::h(reg[j]));
    }
}

void append_swap(Circuit &c, Qubit a, Qubit b) {
    c.add(Gate::cx(a, b));
    c.add(Gate::cx(b, a));
    c.add(Gate::cx(a, b));
}

void append_reversal(Circuit &c, size_t n) {
    for (size_t i = 0; i < n / 2; i++) {
        append_swap(c, static_cast<Qubit>(i), static_cast<Qubit>(n - 1 - i));
    }
}

std::vector<Qubit> qubit_range(size_t lo, size_t hi) {
    std::vector<Qubit> out;
    for (size_t q = lo; q < hi; q++) {
        out.push_back(static_cast<Qubit>(q));
    }
    return out;
}

}  // namespace

RangeSpec::RangeSpec(size_t n_, uint64_t n1_, uint64_t n2_) : n(n_), n1(n1_), n2(n2_) {
    check_register(n);
    if (n1 > n2 || n2 >= dim()) {
        throw std::invalid_argument(
            "range [" + std::to_string(n1) + ", " + std::to_string(n2) + "] must satisfy 0 <= n1 <= n2 <= " +
            std::to_string(dim() - 1));
    }
}

LessThanSpec::LessThanSpec(size_t n_, uint64_t m_) : n(n_), m(m_) {
    check_register(n);
    if (m > (uint64_t{1} << n)) {
        throw std::invalid_argument(
            "less-than threshold " + std::to_string(m) + " exceeds 2^" + std::to_string(n));
    }
}

AdderSpec::AdderSpec(size_t n_, uint64_t a_) : n(n_), a(0) {
    check_register(n);
    a = a_ & ((uint64_t{1} << n) - 1);
}

Circuit mcz(size_t n, const std::vector<Qubit> &participants) {
    check_register(n);
    if (participants.empty()) {
        throw std::invalid_argument("mcz needs at least one participant");
    }
    Circuit c(n);
    if (participants.size() == 1) {
        c.add(Gate::z(participants[0]));
    } else {
        c.add(Gate::mcz(participants));
    }
    return c;
}

Circuit less_than(const LessThanSpec &spec) {
    size_t n = spec.n;
    uint64_t m = spec.m;
    Circuit c(n);
    if (m == (uint64_t{1} << n)) {
        c.add(Gate::z(0));
        c.add(Gate::x(0));
        c.add(Gate::z(0));
        c.add(Gate::x(0));
        return c;
    }
    for (size_t k = n; k-- > 0;) {
        if (!((m >> k) & 1)) {
            continue;
        }
        std::vector<Qubit> flips;
        for (size_t j = k; j < n; j++) {
            if (j == k || !((m >> j) & 1)) {
                flips.push_back(static_cast<Qubit>(j));
            }
        }
        for (auto q : flips) {
            c.add(Gate::x(q));
        }
        c.extend(mcz(n, qubit_range(k, n)));
        for (auto q : flips) {
            c.add(Gate::x(q));
        }
    }
    return c;
}

Circuit qft(size_t n) {
    check_register(n);
    Circuit c(n);
    append_qft_core(c, qubit_range(0, n));
    append_reversal(c, n);
    return c;
}

Circuit iqft(size_t n) {
    check_register(n);
    Circuit c(n);
    append_reversal(c, n);
    append_iqft_core(c, qubit_range(0, n));
    return c;
}

Circuit add_const(const AdderSpec &spec) {
    Circuit c(spec.n);
    if (spec.a == 0) {
        return c;
    }
    auto low = static_cast<size_t>(std::countr_zero(spec.a));
    uint64_t addend = spec.a >> low;
    auto reg = qubit_range(low, spec.n);
    append_qft_core(c, reg);
    // After the core transform local qubit j carries the bit of weight 2^{r-1-j}
    // of the reversed Fourier index, so adding `addend` is a phase of
    // 2 pi addend / 2^{j+1} on it.
    for (size_t j = 0; j < reg.size(); j++) {
        uint64_t modulus = uint64_t{1} << (j + 1);
        uint64_t residue = addend & (modulus - 1);
        if (residue != 0) {
            c.add(Gate::p(2 * pi * static_cast<double>(residue) / static_cast<double>(modulus), reg[j]));
        }
    }
    append_iqft_core(c, reg);
    return c;
}

Circuit range_oracle_a(const RangeSpec &spec) {
    return compose(less_than({spec.n, spec.n2 + 1}), less_than({spec.n, spec.n1}));
}

Circuit range_oracle_b(const RangeSpec &spec) {
    return compose(less_than({spec.n, spec.n2 - spec.n1 + 1}), add_const({spec.n, spec.n1}));
}

namespace {

constexpr std::array<std::pair<OracleId, std::string_view>, 6> ORACLE_NAMES{{
    {OracleId::MCZ, "mcz"},
    {OracleId::LessThan, "less-than"},
    {OracleId::QFT, "qft"},
    {OracleId::Add, "add"},
    {OracleId::RangeA, "range-a"},
    {OracleId::RangeB, "range-b"},
}};

}  // namespace

std::string_view oracle_id_name(OracleId id) {
    for (const auto &[k, v] : ORACLE_NAMES) {
        if (k == id) {
            return v;
        }
    }
    return "?";
}

std::optional<OracleId> oracle_id_from_name(std::string_view name) {
    for (const auto &[k, v] : ORACLE_NAMES) {
        if (v == name) {
            return k;
        }
    }
    return std::nullopt;
}

Circuit build_oracle(const OracleRequest &r) {
    switch (r.id) {
        case OracleId::MCZ: {
            check_register(r.n);
            auto ps = r.participants.empty() ? qubit_range(0, r.n) : r.participants;
            return mcz(r.n, ps);
        }
        case OracleId::LessThan:
            return less_than({r.n, r.m});
        case OracleId::QFT:
            return qft(r.n);
        case OracleId::Add:
            return add_const({r.n, r.a});
        case OracleId::RangeA:
            return range_oracle_a({r.n, r.n1, r.n2});
        case OracleId::RangeB:
            return range_oracle_b({r.n, r.n1, r.n2});
    }
    throw std::invalid_argument("unknown oracle id");
}

}  // namespace qoracle
