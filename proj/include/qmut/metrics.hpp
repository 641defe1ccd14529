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

#include "qmut/circuit.hpp"
#include "qmut/statevector.hpp"

namespace qmut {

/// Structural complexity measures of one circuit.
struct CircuitMetrics {
    std::size_t num_qubits = 0;
    std::size_t num_gates = 0;
    std::size_t num_measurements = 0;
    std::size_t depth = 0;
    std::size_t num_single_gates = 0;
    std::size_t num_multi_gates = 0;
    std::size_t num_entangled_qubits = 0;
    /// True when num_entangled_qubits came from the structural fallback
    /// (circuit too wide to simulate) rather than reduced-state purity.
    bool entanglement_estimated = false;

    bool operator==(const CircuitMetrics&) const = default;
};

/// Computes all metrics for `circuit`.
///
/// depth is the longest chain of gates linked by shared qubits; measurements
/// and barriers never contribute.  Gate size classes come from catalog arity.
///
/// num_entangled_qubits counts qubits whose reduced single-qubit state in the
/// pre-measurement statevector has purity below 1 - 1e-9.  When the circuit
/// exceeds `sim_budget` qubits the count falls back to a structural estimate:
/// union-find over multi-qubit gate operands, counting qubits in components of
/// two or more, with `entanglement_estimated` set.
CircuitMetrics compute_metrics(const Circuit& circuit,
                               std::size_t sim_budget = kDefaultQubitCap);

/// Decile bucket of a gate position: the smallest d in {10,20,...,100} with
/// (position+1)/total_positions <= d/100.  Throws std::out_of_range unless
/// position < total_positions.
int relative_position_bucket(std::size_t position, std::size_t total_positions);

}  // namespace qmut

