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

#include "qmut/circuit.hpp"

#include <stdexcept>
#include <unordered_set>

namespace qmut {

std::string_view output_dominance_name(OutputDominance d) {
    return d == OutputDominance::OutputDominant ? "OutputDominant" : "DiverseOutput";
}

const GateApplication& Circuit::gate(std::size_t position) const {
    if (position >= gates_.size()) {
        throw std::out_of_range("gate position " + std::to_string(position) +
                                " out of range [0, " + std::to_string(gates_.size()) + ")");
    }
    return gates_[position];
}

void Circuit::validate_gate(const GateApplication& gate) const {
    const GateCatalogEntry& entry = catalog_entry(gate.gate);
    if (gate.operands.size() != entry.arity) {
        throw std::invalid_argument(std::string(entry.name) + ": expected " +
                                    std::to_string(entry.arity) + " operands, got " +
                                    std::to_string(gate.operands.size()));
    }
    if (gate.params.size() != entry.param_count) {
        throw std::invalid_argument(std::string(entry.name) + ": expected " +
                                    std::to_string(entry.param_count) + " params, got " +
                                    std::to_string(gate.params.size()));
    }
    std::unordered_set<std::size_t> seen;
    for (std::size_t q : gate.operands) {
        if (q >= num_qubits_) {
            throw std::out_of_range(std::string(entry.name) + ": qubit " +
                                    std::to_string(q) + " out of range (circuit has " +
                                    std::to_string(num_qubits_) + " qubits)");
        }
        if (!seen.insert(q).second) {
            throw std::invalid_argument(std::string(entry.name) + ": duplicate operand q[" +
                                        std::to_string(q) + "]");
        }
    }
}

void Circuit::append_gate(GateApplication gate) {
    validate_gate(gate);
    gates_.push_back(std::move(gate));
}

void Circuit::append_gate(GateId gate, std::vector<std::size_t> operands,
                          std::vector<double> params) {
    append_gate(GateApplication{gate, std::move(operands), std::move(params)});
}

void Circuit::insert_gate(std::size_t position, GateApplication gate) {
    if (position > gates_.size()) {
        throw std::out_of_range("insertion point " + std::to_string(position) +
                                " out of range [0, " + std::to_string(gates_.size()) + "]");
    }
    validate_gate(gate);
    gates_.insert(gates_.begin() + static_cast<std::ptrdiff_t>(position), std::move(gate));
}

void Circuit::remove_gate(std::size_t position) {
    if (position >= gates_.size()) {
        throw std::out_of_range("remove position " + std::to_string(position) +
                                " out of range");
    }
    gates_.erase(gates_.begin() + static_cast<std::ptrdiff_t>(position));
}

void Circuit::replace_gate(std::size_t position, GateApplication gate) {
    if (position >= gates_.size()) {
        throw std::out_of_range("replace position " + std::to_string(position) +
                                " out of range");
    }
    validate_gate(gate);
    gates_[position] = std::move(gate);
}

void Circuit::add_measurement(std::size_t qubit, std::size_t clbit) {
    if (qubit >= num_qubits_) {
        throw std::out_of_range("measured qubit " + std::to_string(qubit) + " out of range");
    }
    if (clbit >= num_clbits_) {
        throw std::out_of_range("measurement target c[" + std::to_string(clbit) +
                                "] out of range");
    }
    for (const auto& [q, c] : measurements_) {
        if (c == clbit) {
            throw std::invalid_argument("clbit c[" + std::to_string(clbit) +
                                        "] measured more than once");
        }
    }
    measurements_.emplace_back(qubit, clbit);
}

bool Circuit::structurally_equal(const Circuit& other) const {
    return num_qubits_ == other.num_qubits_ && num_clbits_ == other.num_clbits_ &&
           gates_ == other.gates_ && measurements_ == other.measurements_;
}

}  // namespace qmut
