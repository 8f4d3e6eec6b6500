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

#include "qoracle/depth_analysis.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qoracle {

DepthRecord measure_pair(const RangeSpec &spec, const BasisSet &basis) {
    auto a = decompose_to_basis(range_oracle_a(spec), basis);
    auto b = decompose_to_basis(range_oracle_b(spec), basis);
    return {spec.n, spec.n1, spec.n2, depth(a), depth(b), a.size(), b.size()};
}

uint64_t sweep_interval_count(size_t n) {
    uint64_t inner = (uint64_t{1} << n) - 2;
    return inner * (inner - 1) / 2;
}

SweepResult sweep(size_t n_min, size_t n_max, const BasisSet &basis, unsigned threads) {
    if (n_min < 3 || n_min > n_max || n_max > SWEEP_QUBIT_CAP) {
        throw std::invalid_argument(
            "sweep needs 3 <= n_min <= n_max <= " + std::to_string(SWEEP_QUBIT_CAP) + ", got [" +
            std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
    }
    // One task per (n, n1) row of intervals.
    std::vector<std::pair<size_t, uint64_t>> tasks;
    for (size_t n = n_min; n <= n_max; n++) {
        for (uint64_t n1 = 1; n1 + 2 < (uint64_t{1} << n); n1++) {
            tasks.emplace_back(n, n1);
        }
    }
    std::vector<std::vector<DepthRecord>> results(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t t = next++; t < tasks.size(); t = next++) {
            auto [n, n1] = tasks[t];
            for (uint64_t n2 = n1 + 1; n2 + 1 < (uint64_t{1} << n); n2++) {
                results[t].push_back(measure_pair({n, n1, n2}, basis));
            }
        }
    };
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<size_t>(1, tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; i++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &th : pool) {
        th.join();
    }

    SweepResult out;
    for (auto &chunk : results) {
        out.records.insert(out.records.end(), chunk.begin(), chunk.end());
    }
    out.summary = summarize(out.records);
    return out;
}

const SweepRow *SweepSummary::row_for(size_t n) const {
    for (const auto &r : rows) {
        if (r.n == n) {
            return &r;
        }
    }
    return nullptr;
}

namespace {

DepthStats stats_of(std::vector<size_t> values) {
    std::sort(values.begin(), values.end());
    DepthStats s;
    s.min = values.front();
    s.max = values.back();
    size_t mid = values.size() / 2;
    s.median = values.size() % 2 == 1 ? static_cast<double>(values[mid])
                                      : (static_cast<double>(values[mid - 1]) + static_cast<double>(values[mid])) / 2;
    return s;
}

}  // namespace

SweepSummary summarize(const std::vector<DepthRecord> &records) {
    std::map<size_t, std::vector<const DepthRecord *>> by_n;
    for (const auto &r : records) {
        by_n[r.n].push_back(&r);
    }
    SweepSummary summary;
    for (const auto &[n, group] : by_n) {
        std::vector<size_t> da;
        std::vector<size_t> db;
        size_t shallower = 0;
        for (const auto *r : group) {
            da.push_back(r->depth_a);
            db.push_back(r->depth_b);
            shallower += r->depth_b < r->depth_a ? 1 : 0;
        }
        SweepRow row;
        row.n = n;
        row.records = group.size();
        row.depth_a = stats_of(std::move(da));
        row.depth_b = stats_of(std::move(db));
        row.b_shallower_fraction = static_cast<double>(shallower) / static_cast<double>(group.size());
        summary.rows.push_back(row);
    }
    return summary;
}

std::string to_csv(const std::vector<DepthRecord> &records, const BasisSet &basis) {
    std::string out;
    out += "# basis: " + basis.str() + "\n";
    out += "# connectivity: all-to-all, no routing or SWAP insertion\n";
    out += CSV_HEADER;
    out += "\n";
    char buf[128];
    for (const auto &r : records) {
        std::snprintf(buf, sizeof(buf), "%zu,%llu,%llu,%zu,%zu,%zu,%zu\n", r.n, static_cast<unsigned long long>(r.n1),
                      static_cast<unsigned long long>(r.n2), r.depth_a, r.depth_b, r.gates_a, r.gates_b);
        out += buf;
    }
    return out;
}

std::vector<DepthRecord> parse_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::vector<DepthRecord> records;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        if (!header_seen) {
            if (line != CSV_HEADER) {
                throw std::invalid_argument("unexpected depth CSV header: " + line);
            }
            header_seen = true;
            continue;
        }
        DepthRecord r;
        unsigned long long n1 = 0;
        unsigned long long n2 = 0;
        char tail = 0;
        if (std::sscanf(line.c_str(), "%zu,%llu,%llu,%zu,%zu,%zu,%zu%c", &r.n, &n1, &n2, &r.depth_a, &r.depth_b,
                        &r.gates_a, &r.gates_b, &tail) != 7) {
            throw std::invalid_argument("malformed depth CSV row: " + line);
        }
        r.n1 = n1;
        r.n2 = n2;
        records.push_back(r);
    }
    if (!header_seen) {
        throw std::invalid_argument("depth CSV has no header");
    }
    return records;
}

nlohmann::json to_json(const SweepResult &result, const BasisSet &basis) {
    auto records = nlohmann::json::array();
    for (const auto &r : result.records) {
        records.push_back({{"n", r.n}, {"n1", r.n1}, {"n2", r.n2}, {"depth_a", r.depth_a}, {"depth_b", r.depth_b},
                           {"gates_a", r.gates_a}, {"gates_b", r.gates_b}});
    }
    auto rows = nlohmann::json::array();
    for (const auto &row : result.summary.rows) {
        auto stats = [](const DepthStats &s) {
            return nlohmann::json{{"min", s.min}, {"median", s.median}, {"max", s.max}};
        };
        rows.push_back({{"n", row.n}, {"records", row.records}, {"depth_a", stats(row.depth_a)},
                        {"depth_b", stats(row.depth_b)}, {"b_shallower_fraction", row.b_shallower_fraction}});
    }
    return {{"basis", basis.str()}, {"connectivity", "all-to-all"}, {"records", std::move(records)},
            {"summary", std::move(rows)}};
}

double GrowthReport::worst_ratio() const {
    double worst = 0;
    for (const auto &s : steps) {
        worst = std::max({worst, s.ratio_a, s.ratio_b});
    }
    return worst;
}

std::string GrowthReport::to_text() const {
    std::string out = "n  max_depth_a  max_depth_b  ratio_a  ratio_b\n";
    char buf[128];
    for (size_t i = 0; i < ns.size(); i++) {
        if (i == 0) {
            std::snprintf(buf, sizeof(buf), "%zu  %11zu  %11zu  %7s  %7s\n", ns[i], max_depth_a[i], max_depth_b[i], "-",
                          "-");
        } else {
            std::snprintf(buf, sizeof(buf), "%zu  %11zu  %11zu  %7.3f  %7.3f\n", ns[i], max_depth_a[i],
                          max_depth_b[i], steps[i - 1].ratio_a, steps[i - 1].ratio_b);
        }
        out += buf;
    }
    out += exponential_flag ? "growth: FLAGGED (a step ratio exceeds 3.0)\n" : "growth: ok\n";
    return out;
}

GrowthReport growth_check(const std::vector<DepthRecord> &records) {
    std::map<size_t, std::pair<size_t, size_t>> max_by_n;
    for (const auto &r : records) {
        auto &[a, b] = max_by_n[r.n];
        a = std::max(a, r.depth_a);
        b = std::max(b, r.depth_b);
    }
    if (max_by_n.size() < 4) {
        throw std::invalid_argument("growth check needs records for at least 4 qubit counts");
    }
    if (max_by_n.rbegin()->first - max_by_n.begin()->first + 1 != max_by_n.size()) {
        throw std::invalid_argument("growth check needs consecutive qubit counts");
    }
    auto ratio = [](size_t prev, size_t cur) {
        if (prev == 0) {
            return cur == 0 ? 1.0 : std::numeric_limits<double>::infinity();
        }
        return static_cast<double>(cur) / static_cast<double>(prev);
    };
    GrowthReport report;
    for (const auto &[n, depths] : max_by_n) {
        if (!report.ns.empty()) {
            GrowthStep step{n, ratio(report.max_depth_a.back(), depths.first),
                            ratio(report.max_depth_b.back(), depths.second)};
            report.exponential_flag |= step.ratio_a > GrowthReport::BLOWUP_RATIO;
            report.exponential_flag |= step.ratio_b > GrowthReport::BLOWUP_RATIO;
            report.steps.push_back(step);
        }
        report.ns.push_back(n);
        report.max_depth_a.push_back(depths.first);
        report.max_depth_b.push_back(depths.second);
    }
    return report;
}

}  // namespace qoracle
