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

#include "qmut/record_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qmut {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void spec_fields_to_json(ordered_json& doc, const MutantSpec& spec) {
    doc["origin"] = spec.origin;
    doc["operator"] = mutation_operator_name(spec.op);
    doc["gate"] = gate_name(spec.gate);
    doc["position"] = spec.position;
    doc["operands"] = spec.operands;
    doc["params"] = spec.params;
    doc["gate_type"] = gate_type_name(spec.gate_type);
    doc["gate_size"] = size_class_name(spec.gate_size);
    doc["position_bucket"] = spec.position_bucket;
}

MutantSpec spec_fields_from_json(const json& doc) {
    MutantSpec spec;
    spec.origin = doc.at("origin").get<std::string>();
    spec.op = mutation_operator_from_name(doc.at("operator").get<std::string>());
    spec.gate = catalog_entry(doc.at("gate").get<std::string>()).id;
    spec.position = doc.at("position").get<std::size_t>();
    spec.operands = doc.at("operands").get<std::vector<std::size_t>>();
    spec.params = doc.at("params").get<std::vector<double>>();
    spec.gate_type = catalog_entry(spec.gate).gate_type;
    spec.gate_size = catalog_entry(spec.gate).size_class;
    spec.position_bucket = doc.at("position_bucket").get<int>();
    return spec;
}

OutputDominance dominance_from_json(const std::string& value) {
    if (value == "OutputDominant" || value == "dominant") {
        return OutputDominance::OutputDominant;
    }
    if (value == "DiverseOutput" || value == "diverse") {
        return OutputDominance::DiverseOutput;
    }
    throw std::invalid_argument("unknown output dominance '" + value + "'");
}

template <typename Reader>
auto read_jsonl(const std::filesystem::path& path, Reader reader) {
    std::vector<decltype(reader(std::string{}))> items;
    std::ifstream in(path);
    if (!in) return items;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            items.push_back(reader(line));
        } catch (const std::exception& e) {
            throw std::runtime_error(path.string() + ":" +
                                     std::to_string(line_no) + ": " + e.what());
        }
    }
    return items;
}

template <typename Range, typename Writer>
void write_jsonl(const std::filesystem::path& path, const Range& items,
                 Writer writer) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write '" + tmp.string() + "'");
        }
        for (const auto& item : items) {
            out << writer(item) << '\n';
        }
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace

std::string spec_to_line(const std::string& id, const MutantSpec& spec) {
    ordered_json doc;
    doc["id"] = id;
    spec_fields_to_json(doc, spec);
    return doc.dump();
}

std::pair<std::string, MutantSpec> spec_from_line(const std::string& line) {
    const json doc = json::parse(line);
    return {doc.at("id").get<std::string>(), spec_fields_from_json(doc)};
}

std::string record_to_line(const MutantRecord& record) {
    ordered_json doc;
    doc["id"] = record.id;
    spec_fields_to_json(doc, record.spec);
    doc["algorithm"] = record.algorithm;
    doc["algorithm_group"] = record.algorithm_group;
    doc["output_dominance"] = output_dominance_name(record.output_dominance);
    ordered_json metrics;
    metrics["num_qubits"] = record.origin_metrics.num_qubits;
    metrics["num_gates"] = record.origin_metrics.num_gates;
    metrics["num_measurements"] = record.origin_metrics.num_measurements;
    metrics["depth"] = record.origin_metrics.depth;
    metrics["num_single_gates"] = record.origin_metrics.num_single_gates;
    metrics["num_multi_gates"] = record.origin_metrics.num_multi_gates;
    metrics["num_entangled_qubits"] =
        record.origin_metrics.num_entangled_qubits;
    metrics["entanglement_estimated"] =
        record.origin_metrics.entanglement_estimated;
    doc["metrics"] = std::move(metrics);
    doc["verdict"] = verdict_kind_name(record.verdict.kind);
    if (record.verdict.p_value) {
        doc["p_value"] = *record.verdict.p_value;
    } else {
        doc["p_value"] = nullptr;
    }
    doc["stillborn_reason"] = record.stillborn_reason;
    return doc.dump();
}

MutantRecord record_from_line(const std::string& line) {
    const json doc = json::parse(line);
    MutantRecord record;
    record.id = doc.at("id").get<std::string>();
    record.spec = spec_fields_from_json(doc);
    record.algorithm = doc.at("algorithm").get<std::string>();
    record.algorithm_group = doc.at("algorithm_group").get<std::string>();
    record.output_dominance =
        dominance_from_json(doc.at("output_dominance").get<std::string>());
    const json& metrics = doc.at("metrics");
    record.origin_metrics.num_qubits =
        metrics.at("num_qubits").get<std::size_t>();
    record.origin_metrics.num_gates = metrics.at("num_gates").get<std::size_t>();
    record.origin_metrics.num_measurements =
        metrics.at("num_measurements").get<std::size_t>();
    record.origin_metrics.depth = metrics.at("depth").get<std::size_t>();
    record.origin_metrics.num_single_gates =
        metrics.at("num_single_gates").get<std::size_t>();
    record.origin_metrics.num_multi_gates =
        metrics.at("num_multi_gates").get<std::size_t>();
    record.origin_metrics.num_entangled_qubits =
        metrics.at("num_entangled_qubits").get<std::size_t>();
    record.origin_metrics.entanglement_estimated =
        metrics.at("entanglement_estimated").get<bool>();
    record.verdict.kind =
        verdict_kind_from_name(doc.at("verdict").get<std::string>());
    if (doc.at("p_value").is_null()) {
        record.verdict.p_value.reset();
    } else {
        record.verdict.p_value = doc.at("p_value").get<double>();
    }
    record.stillborn_reason = doc.at("stillborn_reason").get<std::string>();
    return record;
}

std::vector<std::pair<std::string, MutantSpec>> read_spec_store(
    const std::filesystem::path& path) {
    return read_jsonl(path, [](const std::string& line) {
        return spec_from_line(line);
    });
}

void write_spec_store(const std::filesystem::path& path,
                      std::vector<std::pair<std::string, MutantSpec>> specs) {
    std::sort(specs.begin(), specs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    write_jsonl(path, specs, [](const auto& item) {
        return spec_to_line(item.first, item.second);
    });
}

std::vector<MutantRecord> read_record_store(
    const std::filesystem::path& path) {
    return read_jsonl(path, [](const std::string& line) {
        return record_from_line(line);
    });
}

void write_record_store(const std::filesystem::path& path,
                        std::vector<MutantRecord> records) {
    std::sort(records.begin(), records.end(),
              [](const MutantRecord& a, const MutantRecord& b) {
                  return a.id < b.id;
              });
    write_jsonl(path, records, [](const MutantRecord& record) {
        return record_to_line(record);
    });
}

}  // namespace qmut
