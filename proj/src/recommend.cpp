// Copyright 2026 The qmut authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmut/recommend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qmut {

namespace {

bool in_scope(const MutantRecord& record, const Scope& scope) {
    switch (scope.kind) {
        case ScopeKind::All:
            return true;
        case ScopeKind::Algorithm:
            return record.algorithm == scope.value;
        case ScopeKind::AlgorithmGroup:
            return record.algorithm_group == scope.value;
        case ScopeKind::OutputDominance:
            return output_dominance_name(record.output_dominance) == scope.value;
    }
    throw std::invalid_argument("invalid scope kind");
}

template <typename T>
bool passes(const std::vector<T>& filter, const T& value) {
    return filter.empty() ||
           std::find(filter.begin(), filter.end(), value) != filter.end();
}

bool passes_filters(const MutantRecord& record, const RecommendQuery& q) {
    return passes(q.operators, record.spec.op) &&
           passes(q.gates, record.spec.gate) &&
           passes(q.gate_types, record.spec.gate_type) &&
           passes(q.gate_sizes, record.spec.gate_size) &&
           passes(q.position_buckets, record.spec.position_bucket);
}

/// All 1-, 2-, and 3-way subsets of the mutation characteristics, in a
/// fixed order.
std::vector<std::vector<IndependentVariable>> characteristic_groupings() {
    const auto& ivs = kMutationVariables;
    const std::size_t n = std::size(ivs);
    std::vector<std::vector<IndependentVariable>> groupings;
    for (std::size_t i = 0; i < n; ++i) {
        groupings.push_back({ivs[i]});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            groupings.push_back({ivs[i], ivs[j]});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t l = j + 1; l < n; ++l) {
                groupings.push_back({ivs[i], ivs[j], ivs[l]});
            }
        }
    }
    return groupings;
}

}  // namespace

Recommendation recommend(const std::vector<MutantRecord>& store,
                         const RecommendQuery& query) {
    if (!(query.sr_lo >= 0.0 && query.sr_lo <= query.sr_hi &&
          query.sr_hi <= 1.0)) {
        throw std::invalid_argument("target band must satisfy 0 <= lo <= hi <= 1");
    }
    if (query.max_results == 0) {
        throw std::invalid_argument("max_results must be >= 1");
    }

    std::vector<MutantRecord> scoped;
    for (const MutantRecord& record : store) {
        if (in_scope(record, query.scope)) scoped.push_back(record);
    }

    const std::vector<std::vector<IndependentVariable>> groupings =
        characteristic_groupings();
    std::vector<SurvivalTable> tables;
    tables.reserve(groupings.size());
    for (const auto& grouping : groupings) {
        tables.push_back(survival_rate(scoped, grouping));
    }

    const double midpoint = (query.sr_lo + query.sr_hi) / 2.0;
    struct Scored {
        const MutantRecord* record;
        double distance;
    };
    std::vector<Scored> scored;
    for (const MutantRecord& record : scoped) {
        if (record.verdict.kind == VerdictKind::Stillborn) continue;
        if (!passes_filters(record, query)) continue;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t g = 0; g < groupings.size(); ++g) {
            std::vector<std::string> key;
            key.reserve(groupings[g].size());
            for (const IndependentVariable iv : groupings[g]) {
                key.push_back(iv_value(record, iv));
            }
            const auto it = tables[g].cells.find(key);
            if (it == tables[g].cells.end()) continue;
            const double sr = it->second.sr;
            if (sr < query.sr_lo || sr > query.sr_hi) continue;
            best = std::min(best, std::abs(sr - midpoint));
        }
        if (std::isfinite(best)) scored.push_back({&record, best});
    }

    std::stable_sort(scored.begin(), scored.end(),
                     [](const Scored& a, const Scored& b) {
                         if (a.distance != b.distance) {
                             return a.distance < b.distance;
                         }
                         return a.record->id < b.record->id;
                     });
    if (scored.size() > query.max_results) scored.resize(query.max_results);

    Recommendation result;
    std::size_t survivors = 0;
    for (const Scored& s : scored) {
        result.records.push_back(*s.record);
        if (s.record->verdict.kind == VerdictKind::Survived) ++survivors;
    }
    result.set_survival_rate =
        result.records.empty()
            ? std::numeric_limits<double>::quiet_NaN()
            : static_cast<double>(survivors) /
                  static_cast<double>(result.records.size());
    return result;
}

}  // namespace qmut
