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

#include "qmut/mutation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

#include "qmut/metrics.hpp"

namespace qmut {

namespace {

void check_config(const EnumerationConfig& cfg) {
    if (!(cfg.default_angle > 0.0 && cfg.default_angle < 2.0 * M_PI)) {
        throw std::invalid_argument("default_angle must lie in (0, 2*pi)");
    }
    if (cfg.max_mutants_per_circuit && *cfg.max_mutants_per_circuit == 0) {
        throw std::invalid_argument("max_mutants_per_circuit must be >= 1");
    }
}

/// Bucket of the gate a spec manipulates; Add specs use the gate at the
/// insertion point, with the append point attributed to the last gate.
int spec_bucket(MutationOperator op, std::size_t position,
                std::size_t num_gates) {
    const std::size_t anchor =
        op == MutationOperator::Add ? std::min(position, num_gates - 1)
                                    : position;
    return relative_position_bucket(anchor, num_gates);
}

MutantSpec make_spec(const Circuit& circuit, MutationOperator op, GateId gate,
                     std::size_t position, std::vector<std::size_t> operands,
                     std::vector<double> params) {
    const GateCatalogEntry& entry = catalog_entry(gate);
    MutantSpec spec;
    spec.origin = circuit.name();
    spec.op = op;
    spec.gate = gate;
    spec.position = position;
    spec.operands = std::move(operands);
    spec.params = std::move(params);
    spec.gate_type = entry.gate_type;
    spec.gate_size = entry.size_class;
    spec.position_bucket = spec_bucket(op, position, circuit.gates().size());
    return spec;
}

std::vector<std::size_t> anchor_operands(const Circuit& circuit,
                                         std::size_t insertion_point,
                                         std::size_t arity) {
    const std::size_t last = circuit.gates().size() - 1;
    const GateApplication& anchor =
        circuit.gate(std::min(insertion_point, last));
    std::vector<std::size_t> operands(
        anchor.operands.begin(),
        anchor.operands.begin() +
            static_cast<std::ptrdiff_t>(
                std::min(arity, anchor.operands.size())));
    // Cycle upward from the anchor's highest-numbered slot until full.
    std::size_t q = (anchor.operands.back() + 1) % circuit.num_qubits();
    while (operands.size() < arity) {
        if (std::find(operands.begin(), operands.end(), q) == operands.end()) {
            operands.push_back(q);
        }
        q = (q + 1) % circuit.num_qubits();
    }
    return operands;
}

void exhaustive_tuples(std::size_t num_qubits, std::size_t arity,
                       std::vector<std::size_t>& current,
                       std::vector<std::vector<std::size_t>>& out) {
    if (current.size() == arity) {
        out.push_back(current);
        return;
    }
    for (std::size_t q = 0; q < num_qubits; ++q) {
        if (std::find(current.begin(), current.end(), q) != current.end()) {
            continue;
        }
        current.push_back(q);
        exhaustive_tuples(num_qubits, arity, current, out);
        current.pop_back();
    }
}

std::vector<double> default_params(const GateCatalogEntry& entry,
                                   double default_angle) {
    return std::vector<double>(entry.param_count, default_angle);
}

template <typename T>
bool passes_filter(const std::vector<T>& filter, const T& value) {
    return filter.empty() ||
           std::find(filter.begin(), filter.end(), value) != filter.end();
}

}  // namespace

std::string_view mutation_operator_name(MutationOperator op) {
    switch (op) {
        case MutationOperator::Add: return "Add";
        case MutationOperator::Remove: return "Remove";
        case MutationOperator::Replace: return "Replace";
    }
    throw std::invalid_argument("invalid mutation operator");
}

MutationOperator mutation_operator_from_name(std::string_view name) {
    if (name == "Add") return MutationOperator::Add;
    if (name == "Remove") return MutationOperator::Remove;
    if (name == "Replace") return MutationOperator::Replace;
    throw std::invalid_argument("unknown mutation operator '" +
                                std::string(name) + "'");
}

std::vector<MutantSpec> enumerate_add(const Circuit& circuit,
                                      const EnumerationConfig& cfg) {
    check_config(cfg);
    std::vector<MutantSpec> specs;
    if (circuit.gates().empty()) return specs;
    const std::size_t n = circuit.num_qubits();
    for (std::size_t point = 0; point <= circuit.gates().size(); ++point) {
        for (const GateCatalogEntry& entry : catalog()) {
            if (!entry.mutatable || entry.arity > n) continue;
            if (cfg.operand_strategy == OperandStrategy::Anchor) {
                specs.push_back(make_spec(
                    circuit, MutationOperator::Add, entry.id, point,
                    anchor_operands(circuit, point, entry.arity),
                    default_params(entry, cfg.default_angle)));
            } else {
                std::vector<std::vector<std::size_t>> tuples;
                std::vector<std::size_t> current;
                exhaustive_tuples(n, entry.arity, current, tuples);
                for (auto& tuple : tuples) {
                    specs.push_back(make_spec(
                        circuit, MutationOperator::Add, entry.id, point,
                        std::move(tuple),
                        default_params(entry, cfg.default_angle)));
                }
            }
        }
    }
    return specs;
}

std::vector<MutantSpec> enumerate_remove(const Circuit& circuit) {
    std::vector<MutantSpec> specs;
    for (std::size_t p = 0; p < circuit.gates().size(); ++p) {
        const GateApplication& gate = circuit.gate(p);
        if (!catalog_entry(gate.gate).mutatable) continue;
        specs.push_back(make_spec(circuit, MutationOperator::Remove, gate.gate,
                                  p, {}, {}));
    }
    return specs;
}

std::vector<MutantSpec> enumerate_replace(const Circuit& circuit,
                                          const EnumerationConfig& cfg) {
    check_config(cfg);
    std::vector<MutantSpec> specs;
    for (std::size_t p = 0; p < circuit.gates().size(); ++p) {
        const GateApplication& gate = circuit.gate(p);
        const GateCatalogEntry& original = catalog_entry(gate.gate);
        if (!original.mutatable) continue;
        for (const GateCatalogEntry& entry : catalog()) {
            if (!entry.mutatable || entry.id == original.id ||
                entry.arity != original.arity) {
                continue;
            }
            std::vector<double> params =
                entry.param_count == original.param_count
                    ? gate.params
                    : default_params(entry, cfg.default_angle);
            specs.push_back(make_spec(circuit, MutationOperator::Replace,
                                      entry.id, p, gate.operands,
                                      std::move(params)));
        }
    }
    return specs;
}

std::vector<MutantSpec> enumerate_mutants(const Circuit& circuit,
                                          const EnumerationConfig& cfg) {
    check_config(cfg);
    std::vector<MutantSpec> specs;
    auto take = [&specs, &cfg](std::vector<MutantSpec> batch) {
        for (MutantSpec& spec : batch) {
            if (!passes_filter(cfg.gate_filter, spec.gate)) continue;
            if (!passes_filter(cfg.position_filter, spec.position)) continue;
            specs.push_back(std::move(spec));
        }
    };
    if (passes_filter(cfg.operator_filter, MutationOperator::Add)) {
        take(enumerate_add(circuit, cfg));
    }
    if (passes_filter(cfg.operator_filter, MutationOperator::Remove)) {
        take(enumerate_remove(circuit));
    }
    if (passes_filter(cfg.operator_filter, MutationOperator::Replace)) {
        take(enumerate_replace(circuit, cfg));
    }
    if (cfg.max_mutants_per_circuit &&
        specs.size() > *cfg.max_mutants_per_circuit) {
        specs.resize(*cfg.max_mutants_per_circuit);
    }
    return specs;
}

Circuit apply_mutation(const Circuit& circuit, const MutantSpec& spec) {
    if (!catalog_entry(spec.gate).mutatable) {
        throw std::invalid_argument("gate '" +
                                    std::string(gate_name(spec.gate)) +
                                    "' is not mutatable");
    }
    Circuit mutant = circuit;
    mutant.set_name(mutant_label(spec));
    switch (spec.op) {
        case MutationOperator::Add:
            mutant.insert_gate(spec.position,
                               GateApplication{spec.gate, spec.operands,
                                               spec.params});
            break;
        case MutationOperator::Remove: {
            const GateApplication& target = circuit.gate(spec.position);
            if (target.gate != spec.gate) {
                throw std::invalid_argument(
                    "spec removes '" + std::string(gate_name(spec.gate)) +
                    "' but position " + std::to_string(spec.position) +
                    " holds '" + std::string(gate_name(target.gate)) + "'");
            }
            mutant.remove_gate(spec.position);
            break;
        }
        case MutationOperator::Replace: {
            const GateApplication& target = circuit.gate(spec.position);
            if (target.gate == spec.gate) {
                throw std::invalid_argument("replacement does not change gate '" +
                                            std::string(gate_name(spec.gate)) +
                                            "'");
            }
            if (!catalog_entry(target.gate).mutatable) {
                throw std::invalid_argument(
                    "gate '" + std::string(gate_name(target.gate)) +
                    "' is not mutatable");
            }
            if (target.operands != spec.operands) {
                throw std::invalid_argument(
                    "spec operands do not match the gate at position " +
                    std::to_string(spec.position));
            }
            mutant.replace_gate(spec.position,
                                GateApplication{spec.gate, spec.operands,
                                                spec.params});
            break;
        }
    }
    return mutant;
}

std::string mutant_label(const MutantSpec& spec) {
    std::string label = spec.origin + "__" +
                        std::string(mutation_operator_name(spec.op)) + "_" +
                        std::string(gate_name(spec.gate)) + "_" +
                        std::to_string(spec.position);
    if (spec.op == MutationOperator::Add) {
        label += "_";
        for (std::size_t i = 0; i < spec.operands.size(); ++i) {
            if (i > 0) label += "-";
            label += std::to_string(spec.operands[i]);
        }
    }
    return label;
}

std::string mutant_filename(const MutantSpec& spec) {
    return mutant_label(spec) + ".qasm";
}

std::string mutant_record_id(const MutantSpec& spec) {
    std::string canonical = spec.origin;
    canonical += '|';
    canonical += mutation_operator_name(spec.op);
    canonical += '|';
    canonical += gate_name(spec.gate);
    canonical += '|';
    canonical += std::to_string(spec.position);
    canonical += '|';
    for (std::size_t i = 0; i < spec.operands.size(); ++i) {
        if (i > 0) canonical += ',';
        canonical += std::to_string(spec.operands[i]);
    }
    canonical += '|';
    char buf[40];
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        if (i > 0) canonical += ',';
        std::snprintf(buf, sizeof(buf), "%.17g", spec.params[i]);
        canonical += buf;
    }
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const char c : canonical) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ULL;
    }
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(hash));
    return hex;
}

}  // namespace qmut
