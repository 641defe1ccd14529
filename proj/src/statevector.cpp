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

#include "qmut/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qmut {

namespace {

// Uniform double in [0, 1) with 53 random bits; identical across platforms
// because mt19937_64 output is fully specified by the standard.
double next_uniform(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::string bits_to_key(std::uint64_t packed, std::size_t width) {
    std::string key(width, '0');
    for (std::size_t c = 0; c < width; ++c) {
        if ((packed >> c) & 1) key[width - 1 - c] = '1';
    }
    return key;
}

Counts sample_cumulative(const std::vector<std::string>& keys,
                         const std::vector<double>& cumulative,
                         std::size_t shots, std::uint64_t seed) {
    Counts counts;
    if (keys.empty()) return counts;
    std::mt19937_64 engine(seed);
    for (std::size_t s = 0; s < shots; ++s) {
        const double u = next_uniform(engine);
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const std::size_t index =
            it == cumulative.end() ? keys.size() - 1
                                   : static_cast<std::size_t>(it - cumulative.begin());
        ++counts[keys[index]];
    }
    return counts;
}

}  // namespace

void apply_gate(std::vector<Complex>& state, std::size_t num_qubits,
                const GateApplication& gate) {
    const GateCatalogEntry& entry = catalog_entry(gate.gate);
    const GateMatrix matrix = entry.unitary(gate.params);
    const std::size_t k = gate.operands.size();
    const std::size_t dim = std::size_t{1} << k;

    // spread[j] places subspace index j at the operand bit positions.
    std::vector<std::size_t> spread(dim, 0);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < k; ++i) {
            if ((j >> i) & 1) spread[j] |= std::size_t{1} << gate.operands[i];
        }
    }
    std::vector<std::size_t> sorted(gate.operands.begin(), gate.operands.end());
    std::sort(sorted.begin(), sorted.end());

    const std::size_t num_bases = state.size() >> k;
    std::vector<Complex> in(dim), out(dim);
    for (std::size_t b = 0; b < num_bases; ++b) {
        // Expand b into a full index with zero bits at the operand positions.
        std::size_t base = b;
        for (const std::size_t p : sorted) {
            const std::size_t low = base & ((std::size_t{1} << p) - 1);
            base = ((base >> p) << (p + 1)) | low;
        }
        for (std::size_t j = 0; j < dim; ++j) in[j] = state[base | spread[j]];
        for (std::size_t r = 0; r < dim; ++r) {
            Complex acc{0.0, 0.0};
            for (std::size_t c = 0; c < dim; ++c) acc += matrix[r][c] * in[c];
            out[r] = acc;
        }
        for (std::size_t j = 0; j < dim; ++j) state[base | spread[j]] = out[j];
    }
    (void)num_qubits;
}

std::vector<Complex> run_statevector(const Circuit& circuit,
                                     std::size_t qubit_cap) {
    if (circuit.num_qubits() > qubit_cap) {
        throw std::domain_error("circuit '" + circuit.name() + "' has " +
                                std::to_string(circuit.num_qubits()) +
                                " qubits; simulator cap is " +
                                std::to_string(qubit_cap));
    }
    std::vector<Complex> state(std::size_t{1} << circuit.num_qubits(),
                               Complex{0.0, 0.0});
    state[0] = Complex{1.0, 0.0};
    for (const GateApplication& gate : circuit.gates()) {
        apply_gate(state, circuit.num_qubits(), gate);
    }
    return state;
}

Distribution measured_distribution(const Circuit& circuit,
                                   const std::vector<Complex>& state) {
    // Accumulate |amplitude|^2 keyed by the packed clbit readout.  Iteration
    // over basis states is index-ascending, so circuits whose amplitudes agree
    // in magnitude produce bit-identical sums.
    std::map<std::uint64_t, double> packed;
    const auto& measurements = circuit.measurements();
    for (std::size_t index = 0; index < state.size(); ++index) {
        const double p = std::norm(state[index]);
        std::uint64_t value = 0;
        for (const auto& [qubit, clbit] : measurements) {
            if ((index >> qubit) & 1) value |= std::uint64_t{1} << clbit;
        }
        packed[value] += p;
    }
    Distribution distribution;
    for (const auto& [value, p] : packed) {
        if (p > 0.0) distribution[bits_to_key(value, circuit.num_clbits())] = p;
    }
    return distribution;
}

Distribution measured_distribution(const Circuit& circuit,
                                   std::size_t qubit_cap) {
    return measured_distribution(circuit, run_statevector(circuit, qubit_cap));
}

Counts sample_shots(const Circuit& circuit, std::size_t shots,
                    std::uint64_t seed, std::size_t qubit_cap) {
    const Distribution distribution = measured_distribution(circuit, qubit_cap);
    std::vector<std::string> keys;
    std::vector<double> cumulative;
    keys.reserve(distribution.size());
    cumulative.reserve(distribution.size());
    double sum = 0.0;
    for (const auto& [key, p] : distribution) {
        sum += p;
        keys.push_back(key);
        cumulative.push_back(sum);
    }
    return sample_cumulative(keys, cumulative, shots, seed);
}

Counts sample_distribution(const Distribution& distribution, std::size_t shots,
                           std::uint64_t seed) {
    std::vector<std::string> keys;
    std::vector<double> cumulative;
    double sum = 0.0;
    for (const auto& [key, p] : distribution) {
        if (p < 0.0) {
            throw std::invalid_argument("negative probability for outcome '" +
                                        key + "'");
        }
        if (p == 0.0) continue;
        sum += p;
        keys.push_back(key);
        cumulative.push_back(sum);
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("distribution sums to " +
                                    std::to_string(sum) + ", expected 1");
    }
    return sample_cumulative(keys, cumulative, shots, seed);
}

}  // namespace qmut
