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

#pragma once

#include <string>
#include <vector>

#include "qmut/analytics.hpp"

namespace qmut {

/// Population restriction for a recommendation query; at most one program
/// label is constrained.
enum class ScopeKind { All, Algorithm, AlgorithmGroup, OutputDominance };

struct Scope {
    ScopeKind kind = ScopeKind::All;
    /// Label value; for OutputDominance one of "OutputDominant" or
    /// "DiverseOutput".  Ignored when kind == All.
    std::string value;
};

struct RecommendQuery {
    Scope scope;
    /// Characteristic filters; empty means unconstrained.
    std::vector<MutationOperator> operators;
    std::vector<GateId> gates;
    std::vector<GateType> gate_types;
    std::vector<SizeClass> gate_sizes;
    std::vector<int> position_buckets;
    /// Target survival-rate band, inclusive.
    double sr_lo = 0.0;
    double sr_hi = 1.0;
    std::size_t max_results = 10;
};

struct Recommendation {
    /// Selected records, closest-to-target first.
    std::vector<MutantRecord> records;
    /// Survival rate over the selected records themselves (NaN when empty),
    /// so callers can compare the set against the requested band.
    double set_survival_rate = 0.0;
};

/// Selects mutants whose characteristics sit in the requested survival-rate
/// band:
///
///  1. restrict the store to the scope, then apply the characteristic
///     filters to obtain the candidates (stillborn records are never
///     candidates);
///  2. compute the survival rate of every 1-, 2-, and 3-way combination of
///     the five mutation characteristics over the scoped records — the
///     scope fixes the statistics while filters only narrow the candidates;
///  3. keep candidates belonging to at least one combination whose rate
///     falls within [sr_lo, sr_hi];
///  4. order by |combination sr - band midpoint| of each record's closest
///     qualifying combination, ties by record id;
///  5. truncate to max_results.
///
/// Deterministic for a given store and query.  An empty result is not an
/// error.  Throws std::invalid_argument on an invalid band or
/// max_results == 0.
Recommendation recommend(const std::vector<MutantRecord>& store,
                         const RecommendQuery& query);

}  // namespace qmut
