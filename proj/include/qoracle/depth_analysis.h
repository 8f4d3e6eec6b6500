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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qoracle/circuit.h"
#include "qoracle/oracles.h"

namespace qoracle {

/// Post-decomposition depth and gate count of both range implementations.
struct DepthRecord {
    size_t n = 0;
    uint64_t n1 = 0;
    uint64_t n2 = 0;
    size_t depth_a = 0;
    size_t depth_b = 0;
    size_t gates_a = 0;
    size_t gates_b = 0;

    bool operator==(const DepthRecord &) const = default;
};

DepthRecord measure_pair(const RangeSpec &spec, const BasisSet &basis = BasisSet::ibm_default());

struct DepthStats {
    size_t min = 0;
    double median = 0;
    size_t max = 0;

    bool operator==(const DepthStats &) const = default;
};

struct SweepRow {
    size_t n = 0;
    size_t records = 0;
    DepthStats depth_a;
    DepthStats depth_b;
    /// Share of intervals with depth_b < depth_a.
    double b_shallower_fraction = 0;

    bool operator==(const SweepRow &) const = default;
};

struct SweepSummary {
    std::vector<SweepRow> rows;

    const SweepRow *row_for(size_t n) const;
};

struct SweepResult {
    std::vector<DepthRecord> records;
    SweepSummary summary;
};

inline constexpr size_t SWEEP_QUBIT_CAP = 10;

/// Every interval 0 < n1 < n2 < 2^n - 1 for n in [n_min, n_max].
///
/// Work is split over `threads` workers (0 picks the hardware concurrency);
/// records come back sorted by (n, n1, n2) whatever the thread count.
/// Requires 3 <= n_min <= n_max <= SWEEP_QUBIT_CAP.
SweepResult sweep(size_t n_min, size_t n_max, const BasisSet &basis = BasisSet::ibm_default(),
                  unsigned threads = 0);

/// Number of sweep intervals for one qubit count: C(2^n - 2, 2).
uint64_t sweep_interval_count(size_t n);

SweepSummary summarize(const std::vector<DepthRecord> &records);

/// Header line used by write_csv.
inline constexpr const char *CSV_HEADER = "n,n1,n2,depth_a,depth_b,gates_a,gates_b";

/// Two '#' comment lines (basis and connectivity) then the header and rows.
std::string to_csv(const std::vector<DepthRecord> &records, const BasisSet &basis = BasisSet::ibm_default());
std::vector<DepthRecord> parse_csv(const std::string &text);

nlohmann::json to_json(const SweepResult &result, const BasisSet &basis = BasisSet::ibm_default());

struct GrowthStep {
    size_t n = 0;
    double ratio_a = 0;
    double ratio_b = 0;
};

/// Largest depth over all intervals per qubit count, and the step ratios
/// depth(n + 1) / depth(n).
struct GrowthReport {
    static constexpr double BLOWUP_RATIO = 3.0;

    std::vector<size_t> ns;
    std::vector<size_t> max_depth_a;
    std::vector<size_t> max_depth_b;
    std::vector<GrowthStep> steps;
    /// True when any step ratio exceeds BLOWUP_RATIO.
    bool exponential_flag = false;

    double worst_ratio() const;
    std::string to_text() const;
};

/// Throws std::invalid_argument unless the records cover at least four
/// consecutive qubit counts.
GrowthReport growth_check(const std::vector<DepthRecord> &records);

}  // namespace qoracle
