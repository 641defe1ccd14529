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

#include "qmut/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qmut {

namespace {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

/// RFC 4180 quoting: fields containing separators, quotes, or line breaks
/// are quoted with embedded quotes doubled.
std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (const char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void append_row(std::string& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_field(fields[i]);
    }
    out += "\r\n";
}

double metric_value(const CircuitMetrics& m, const std::string& name) {
    if (name == "num_qubits") return static_cast<double>(m.num_qubits);
    if (name == "num_gates") return static_cast<double>(m.num_gates);
    if (name == "num_measurements") return static_cast<double>(m.num_measurements);
    if (name == "depth") return static_cast<double>(m.depth);
    if (name == "num_single_gates") return static_cast<double>(m.num_single_gates);
    if (name == "num_multi_gates") return static_cast<double>(m.num_multi_gates);
    if (name == "num_entangled_qubits") {
        return static_cast<double>(m.num_entangled_qubits);
    }
    throw std::invalid_argument("unknown metric '" + name + "'");
}

}  // namespace

std::string_view iv_name(IndependentVariable iv) {
    switch (iv) {
        case IndependentVariable::Operator: return "operator";
        case IndependentVariable::Gate: return "gate";
        case IndependentVariable::GateType: return "gate_type";
        case IndependentVariable::GateSize: return "gate_size";
        case IndependentVariable::PositionBucket: return "position_bucket";
        case IndependentVariable::Algorithm: return "algorithm";
        case IndependentVariable::AlgorithmGroup: return "algorithm_group";
        case IndependentVariable::OutputDominance: return "output_dominance";
    }
    throw std::invalid_argument("invalid independent variable");
}

IndependentVariable iv_from_name(std::string_view name) {
    for (const IndependentVariable iv : kAllIndependentVariables) {
        if (iv_name(iv) == name) return iv;
    }
    throw std::invalid_argument("unknown independent variable '" +
                                std::string(name) + "'");
}

std::string iv_value(const MutantRecord& record, IndependentVariable iv) {
    switch (iv) {
        case IndependentVariable::Operator:
            return std::string(mutation_operator_name(record.spec.op));
        case IndependentVariable::Gate:
            return std::string(gate_name(record.spec.gate));
        case IndependentVariable::GateType:
            return std::string(gate_type_name(record.spec.gate_type));
        case IndependentVariable::GateSize:
            return std::string(size_class_name(record.spec.gate_size));
        case IndependentVariable::PositionBucket:
            return std::to_string(record.spec.position_bucket);
        case IndependentVariable::Algorithm:
            return record.algorithm;
        case IndependentVariable::AlgorithmGroup:
            return record.algorithm_group;
        case IndependentVariable::OutputDominance:
            return std::string(output_dominance_name(record.output_dominance));
    }
    throw std::invalid_argument("invalid independent variable");
}

SurvivalTable survival_rate(const std::vector<MutantRecord>& records,
                            const std::vector<IndependentVariable>& grouping) {
    SurvivalTable table;
    table.grouping = grouping;
    for (const MutantRecord& record : records) {
        if (record.verdict.kind == VerdictKind::Stillborn) continue;
        std::vector<std::string> key;
        key.reserve(grouping.size());
        for (const IndependentVariable iv : grouping) {
            key.push_back(iv_value(record, iv));
        }
        SurvivalCell& cell = table.cells[key];
        ++cell.total;
        if (record.verdict.kind == VerdictKind::Survived) ++cell.survivors;
    }
    for (auto& [key, cell] : table.cells) {
        cell.sr = static_cast<double>(cell.survivors) /
                  static_cast<double>(cell.total);
    }
    return table;
}

std::vector<std::pair<std::vector<std::string>, SurvivalCell>>
rank_interactions(const SurvivalTable& table, std::size_t k) {
    if (k == 0) throw std::invalid_argument("rank_interactions: k must be >= 1");
    std::vector<std::pair<std::vector<std::string>, SurvivalCell>> ranked(
        table.cells.begin(), table.cells.end());
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const auto& a, const auto& b) {
                         if (a.second.sr != b.second.sr) {
                             return a.second.sr > b.second.sr;
                         }
                         if (a.second.total != b.second.total) {
                             return a.second.total > b.second.total;
                         }
                         return a.first < b.first;
                     });
    if (ranked.size() > k) ranked.resize(k);
    return ranked;
}

double pearson(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("pearson: length mismatch");
    }
    if (xs.size() < 2) {
        throw std::invalid_argument("pearson: need at least two points");
    }
    const double n = static_cast<double>(xs.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw std::domain_error("pearson: zero variance");
    }
    return sxy / std::sqrt(sxx * syy);
}

std::vector<std::string> complexity_metric_names() {
    return {"num_qubits",       "num_gates",       "num_measurements",
            "depth",            "num_single_gates", "num_multi_gates",
            "num_entangled_qubits"};
}

std::map<std::string, double> complexity_correlations(
    const std::vector<MutantRecord>& records) {
    struct OriginStats {
        CircuitMetrics metrics;
        std::size_t survivors = 0;
        std::size_t total = 0;
    };
    std::map<std::string, OriginStats> origins;
    for (const MutantRecord& record : records) {
        OriginStats& stats = origins[record.spec.origin];
        stats.metrics = record.origin_metrics;
        if (record.verdict.kind == VerdictKind::Stillborn) continue;
        ++stats.total;
        if (record.verdict.kind == VerdictKind::Survived) ++stats.survivors;
    }
    std::vector<double> srs;
    std::vector<CircuitMetrics> metrics;
    for (const auto& [origin, stats] : origins) {
        if (stats.total == 0) continue;
        srs.push_back(static_cast<double>(stats.survivors) /
                      static_cast<double>(stats.total));
        metrics.push_back(stats.metrics);
    }
    if (srs.size() < 2) {
        throw std::invalid_argument(
            "complexity_correlations: need records from at least two circuits");
    }
    std::map<std::string, double> result;
    for (const std::string& name : complexity_metric_names()) {
        std::vector<double> xs;
        xs.reserve(metrics.size());
        for (const CircuitMetrics& m : metrics) {
            xs.push_back(metric_value(m, name));
        }
        try {
            result[name] = pearson(xs, srs);
        } catch (const std::domain_error&) {
            result[name] = std::numeric_limits<double>::quiet_NaN();
        }
    }
    return result;
}

std::string survival_table_csv(const SurvivalTable& table) {
    std::string out;
    std::vector<std::string> header;
    for (const IndependentVariable iv : table.grouping) {
        header.emplace_back(iv_name(iv));
    }
    header.emplace_back("survivors");
    header.emplace_back("total");
    header.emplace_back("sr");
    append_row(out, header);
    for (const auto& [key, cell] : table.cells) {
        std::vector<std::string> row = key;
        row.push_back(std::to_string(cell.survivors));
        row.push_back(std::to_string(cell.total));
        row.push_back(format_double(cell.sr));
        append_row(out, row);
    }
    return out;
}

std::string ranked_csv(
    const SurvivalTable& table,
    const std::vector<std::pair<std::vector<std::string>, SurvivalCell>>&
        ranked) {
    std::string out;
    std::vector<std::string> header;
    header.emplace_back("rank");
    for (const IndependentVariable iv : table.grouping) {
        header.emplace_back(iv_name(iv));
    }
    header.emplace_back("survivors");
    header.emplace_back("total");
    header.emplace_back("sr");
    append_row(out, header);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        std::vector<std::string> row;
        row.push_back(std::to_string(i + 1));
        for (const std::string& value : ranked[i].first) row.push_back(value);
        row.push_back(std::to_string(ranked[i].second.survivors));
        row.push_back(std::to_string(ranked[i].second.total));
        row.push_back(format_double(ranked[i].second.sr));
        append_row(out, row);
    }
    return out;
}

std::string correlations_csv(const std::map<std::string, double>& correlations) {
    std::string out;
    append_row(out, {"metric", "coefficient"});
    for (const std::string& name : complexity_metric_names()) {
        const auto it = correlations.find(name);
        if (it == correlations.end()) continue;
        append_row(out, {name, format_double(it->second)});
    }
    return out;
}

std::string heatmap_json(const SurvivalTable& table) {
    if (table.grouping.size() != 2) {
        throw std::invalid_argument(
            "heatmap_json: grouping must have exactly two dimensions");
    }
    std::set<std::string> row_set, col_set;
    for (const auto& [key, cell] : table.cells) {
        row_set.insert(key[0]);
        col_set.insert(key[1]);
    }
    nlohmann::ordered_json doc;
    doc["row_variable"] = iv_name(table.grouping[0]);
    doc["col_variable"] = iv_name(table.grouping[1]);
    doc["rows"] = std::vector<std::string>(row_set.begin(), row_set.end());
    doc["cols"] = std::vector<std::string>(col_set.begin(), col_set.end());
    nlohmann::ordered_json grid = nlohmann::ordered_json::array();
    for (const std::string& row : row_set) {
        nlohmann::ordered_json line = nlohmann::ordered_json::array();
        for (const std::string& col : col_set) {
            const auto it = table.cells.find({row, col});
            if (it == table.cells.end()) {
                line.push_back(nullptr);
            } else {
                line.push_back(it->second.sr);
            }
        }
        grid.push_back(std::move(line));
    }
    doc["sr"] = std::move(grid);
    return doc.dump(2) + "\n";
}

}  // namespace qmut
