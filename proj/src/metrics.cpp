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

#include "qmut/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qmut/gate_catalog.hpp"

namespace qmut {

namespace {

constexpr double kPurityTolerance = 1e-9;

std::size_t semantic_entangled_qubits(const Circuit& circuit,
                                      std::size_t sim_budget) {
    const std::vector<Complex> state = run_statevector(circuit, sim_budget);
    const std::size_t n = circuit.num_qubits();
    std::size_t count = 0;
    for (std::size_t q = 0; q < n; ++q) {
        // Reduced density matrix of qubit q: rho_ab = sum_r psi(a,r) psi*(b,r)
        // where r runs over the other qubits.
        const std::size_t bit = std::size_t{1} << q;
        double rho00 = 0.0, rho11 = 0.0;
        Complex rho01{0.0, 0.0};
        for (std::size_t index = 0; index < state.size(); ++index) {
            if (index & bit) continue;
            const Complex a0 = state[index];
            const Complex a1 = state[index | bit];
            rho00 += std::norm(a0);
            rho11 += std::norm(a1);
            rho01 += a0 * std::conj(a1);
        }
        const double purity =
            rho00 * rho00 + rho11 * rho11 + 2.0 * std::norm(rho01);
        if (purity < 1.0 - kPurityTolerance) ++count;
    }
    return count;
}

std::size_t structural_entangled_qubits(const Circuit& circuit) {
    const std::size_t n = circuit.num_qubits();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t q) {
        while (parent[q] != q) {
            parent[q] = parent[parent[q]];
            q = parent[q];
        }
        return q;
    };
    for (const GateApplication& gate : circuit.gates()) {
        for (std::size_t i = 1; i < gate.operands.size(); ++i) {
            parent[find(gate.operands[i])] = find(gate.operands[0]);
        }
    }
    std::vector<std::size_t> component_size(n, 0);
    for (std::size_t q = 0; q < n; ++q) ++component_size[find(q)];
    std::size_t count = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (component_size[find(q)] >= 2) ++count;
    }
    return count;
}

}  // namespace

CircuitMetrics compute_metrics(const Circuit& circuit, std::size_t sim_budget) {
    CircuitMetrics m;
    m.num_qubits = circuit.num_qubits();
    m.num_gates = circuit.gates().size();
    m.num_measurements = circuit.measurements().size();

    std::vector<std::size_t> qubit_depth(circuit.num_qubits(), 0);
    for (const GateApplication& gate : circuit.gates()) {
        const GateCatalogEntry& entry = catalog_entry(gate.gate);
        if (entry.size_class == SizeClass::Single) {
            ++m.num_single_gates;
        } else {
            ++m.num_multi_gates;
        }
        std::size_t layer = 0;
        for (const std::size_t q : gate.operands) {
            layer = std::max(layer, qubit_depth[q]);
        }
        ++layer;
        for (const std::size_t q : gate.operands) qubit_depth[q] = layer;
        m.depth = std::max(m.depth, layer);
    }

    if (circuit.num_qubits() <= sim_budget) {
        m.num_entangled_qubits = semantic_entangled_qubits(circuit, sim_budget);
    } else {
        m.num_entangled_qubits = structural_entangled_qubits(circuit);
        m.entanglement_estimated = true;
    }
    return m;
}

int relative_position_bucket(std::size_t position,
                             std::size_t total_positions) {
    if (total_positions == 0 || position >= total_positions) {
        throw std::out_of_range("position " + std::to_string(position) +
                                " out of range for " +
                                std::to_string(total_positions) + " gates");
    }
    // Smallest decile covering (position+1)/total, via integer ceiling.
    const std::size_t decile =
        (10 * (position + 1) + total_positions - 1) / total_positions;
    return static_cast<int>(decile) * 10;
}

}  // namespace qmut
