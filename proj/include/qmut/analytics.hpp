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

#include <map>
#include <string>
#include <vector>

#include "qmut/metrics.hpp"
#include "qmut/mutation.hpp"
#include "qmut/oracles.hpp"

namespace qmut {

/// Judged mutant as persisted in the record store: the full spec, program
/// labels, a metrics snapshot of the origin circuit, and the verdict.
struct MutantRecord {
    std::string id;
    MutantSpec spec;
    std::string algorithm;
    std::string algorithm_group;
    OutputDominance output_dominance = OutputDominance::OutputDominant;
    CircuitMetrics origin_metrics;
    Verdict verdict;
    std::string stillborn_reason;

    bool operator==(const MutantRecord&) const = default;
};

/// Grouping dimensions for survival-rate tables.  The first five describe
/// the mutation, the last three the mutated program.
enum class IndependentVariable {
    Operator,
    Gate,
    GateType,
    GateSize,
    PositionBucket,
    Algorithm,
    AlgorithmGroup,
    OutputDominance,
};

inline constexpr IndependentVariable kAllIndependentVariables[] = {
    IndependentVariable::Operator,        IndependentVariable::Gate,
    IndependentVariable::GateType,        IndependentVariable::GateSize,
    IndependentVariable::PositionBucket,  IndependentVariable::Algorithm,
    IndependentVariable::AlgorithmGroup,  IndependentVariable::OutputDominance,
};

/// The five mutation-characteristic dimensions (no program labels); the
/// recommender enumerates its combinations over these.
inline constexpr IndependentVariable kMutationVariables[] = {
    IndependentVariable::Operator, IndependentVariable::Gate,
    IndependentVariable::GateType, IndependentVariable::GateSize,
    IndependentVariable::PositionBucket,
};

std::string_view iv_name(IndependentVariable iv);
IndependentVariable iv_from_name(std::string_view name);

/// The record's value along one grouping dimension, as a string (buckets
/// render as decimal integers).
std::string iv_value(const MutantRecord& record, IndependentVariable iv);

struct SurvivalCell {
    std::size_t survivors = 0;
    std::size_t total = 0;  // non-stillborn records only
    double sr = 0.0;

    bool operator==(const SurvivalCell&) const = default;
};

struct SurvivalTable {
    std::vector<IndependentVariable> grouping;
    std::map<std::vector<std::string>, SurvivalCell> cells;
};

/// Survival rate per grouping cell: survivors / non-stillborn records.
/// Stillborn records contribute to no cell; value tuples with no executed
/// records are omitted.  An empty grouping yields one overall cell keyed by
/// the empty tuple.  Any grouping arity is accepted here; the CLI restricts
/// reports to 1-3 dimensions.
SurvivalTable survival_rate(const std::vector<MutantRecord>& records,
                            const std::vector<IndependentVariable>& grouping);

/// Cells ordered by sr descending, ties by total descending then by value
/// tuple ascending; at most k entries.  Throws std::invalid_argument when
/// k == 0.
std::vector<std::pair<std::vector<std::string>, SurvivalCell>>
rank_interactions(const SurvivalTable& table, std::size_t k);

/// Sample Pearson correlation coefficient.  Throws std::invalid_argument on
/// length mismatch or fewer than two points, std::domain_error when either
/// vector has zero variance.
double pearson(const std::vector<double>& xs, const std::vector<double>& ys);

/// Pearson correlation between per-origin-circuit survival rate and each of
/// the seven complexity metrics, paired per origin circuit.  Origins whose
/// records are all stillborn are skipped.  A metric with degenerate variance
/// (or degenerate SR variance) maps to NaN.  Throws std::invalid_argument
/// when fewer than two origins remain.
std::map<std::string, double> complexity_correlations(
    const std::vector<MutantRecord>& records);

/// Metric names in report order, matching complexity_correlations keys.
std::vector<std::string> complexity_metric_names();

/// CSV (RFC 4180, CRLF) with one row per cell: grouping values, survivors,
/// total, sr.
std::string survival_table_csv(const SurvivalTable& table);

/// CSV of ranked cells with a leading rank column.
std::string ranked_csv(
    const SurvivalTable& table,
    const std::vector<std::pair<std::vector<std::string>, SurvivalCell>>& ranked);

/// CSV with metric,coefficient rows in complexity_metric_names() order.
std::string correlations_csv(const std::map<std::string, double>& correlations);

/// Heatmap JSON for a two-dimensional table: sorted row/column values and a
/// grid of sr values with null where no mutants exist.  Throws
/// std::invalid_argument unless the grouping has exactly two dimensions.
std::string heatmap_json(const SurvivalTable& table);

}  // namespace qmut
