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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qmut/gate_catalog.hpp"

namespace qmut {

/// Program classification carried by a circuit: the algorithm it
/// implements, the algorithm group, and whether its output is judged by
/// the dominant outcome or by the full distribution.
enum class OutputDominance {
    OutputDominant,
    DiverseOutput,
};

std::string_view output_dominance_name(OutputDominance d);

struct ProgramMeta {
    std::string algorithm;
    std::string algorithm_group;
    OutputDominance output_dominance = OutputDominance::OutputDominant;
};

/// One gate applied to concrete qubits. Operand count and parameter count
/// must match the catalog entry.
struct GateApplication {
    GateId gate;
    std::vector<std::size_t> operands;
    std::vector<double> params;

    bool operator==(const GateApplication&) const = default;
};

/// Gate-level circuit over flat qubit/clbit index spaces.
///
/// Gate list order defines position indices 0..N-1; measurements are not
/// positions and always follow the gate list.
class Circuit {
public:
    Circuit() = default;
    Circuit(std::string name, std::size_t num_qubits, std::size_t num_clbits)
        : name_(std::move(name)), num_qubits_(num_qubits), num_clbits_(num_clbits) {}

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t num_clbits() const { return num_clbits_; }

    const std::vector<GateApplication>& gates() const { return gates_; }
    std::size_t num_gates() const { return gates_.size(); }
    const GateApplication& gate(std::size_t position) const;

    /// (qubit, clbit) pairs; at most one measurement per clbit.
    const std::vector<std::pair<std::size_t, std::size_t>>& measurements() const {
        return measurements_;
    }

    const ProgramMeta& meta() const { return meta_; }
    void set_meta(ProgramMeta meta) { meta_ = std::move(meta); }

    /// Appends a gate; validates operand arity, parameter count, index
    /// bounds, and operand distinctness against the catalog.
    void append_gate(GateApplication gate);
    void append_gate(GateId gate, std::vector<std::size_t> operands,
                     std::vector<double> params = {});

    /// Inserts before `position` (== num_gates() appends). Same validation
    /// as append_gate.
    void insert_gate(std::size_t position, GateApplication gate);

    /// Removes the gate at `position`; later positions shift down by one.
    void remove_gate(std::size_t position);

    /// Substitutes the gate at `position` in place.
    void replace_gate(std::size_t position, GateApplication gate);

    void add_measurement(std::size_t qubit, std::size_t clbit);

    /// Structural equality: registers, gates, measurements. Name and
    /// program metadata are intentionally excluded.
    bool structurally_equal(const Circuit& other) const;

private:
    void validate_gate(const GateApplication& gate) const;

    std::string name_ = "circuit";
    std::size_t num_qubits_ = 0;
    std::size_t num_clbits_ = 0;
    std::vector<GateApplication> gates_;
    std::vector<std::pair<std::size_t, std::size_t>> measurements_;
    ProgramMeta meta_;
};

}  // namespace qmut
