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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qmut/circuit.hpp"

namespace qmut {

/// Largest circuit width the dense simulator accepts by default.
inline constexpr std::size_t kDefaultQubitCap = 16;

/// Measurement outcomes keyed by classical bitstring.  Keys have exactly
/// `num_clbits` characters; clbit 0 is the rightmost character.
using Counts = std::map<std::string, std::uint64_t>;

/// Probability per classical bitstring; same key convention as Counts.
using Distribution = std::map<std::string, double>;

/// Applies one gate to a dense amplitude vector over `num_qubits` qubits.
/// Qubit 0 is the least-significant bit of the state index.  The gate matrix
/// acts on the subspace spanned by `gate.operands`, with operand 0 as the
/// least-significant subspace bit.
void apply_gate(std::vector<Complex>& state, std::size_t num_qubits,
                const GateApplication& gate);

/// Runs every gate of `circuit` on |0...0> and returns the final amplitude
/// vector (size 2^n).  Measurements are deferred and do not affect the state.
/// Throws std::domain_error when the circuit exceeds `qubit_cap` qubits.
std::vector<Complex> run_statevector(const Circuit& circuit,
                                     std::size_t qubit_cap = kDefaultQubitCap);

/// Exact outcome distribution over the circuit's measured clbits, computed by
/// marginalising |amplitude|^2 over unmeasured qubits.  Unmeasured clbits read
/// '0'.  Entries with zero probability are omitted.
Distribution measured_distribution(const Circuit& circuit,
                                   const std::vector<Complex>& state);

/// Convenience overload that simulates the circuit first.
Distribution measured_distribution(const Circuit& circuit,
                                   std::size_t qubit_cap = kDefaultQubitCap);

/// Draws `shots` samples from the circuit's measurement distribution using an
/// inverse-CDF walk over a mt19937_64 stream seeded with `seed`.  Identical
/// (circuit, shots, seed) triples reproduce identical counts on every
/// platform; circuits with identical measurement distributions produce
/// bit-identical counts under the same seed.
Counts sample_shots(const Circuit& circuit, std::size_t shots,
                    std::uint64_t seed, std::size_t qubit_cap = kDefaultQubitCap);

/// Draws `shots` samples from an explicit distribution with the same generator
/// as `sample_shots`.  Probabilities must be non-negative and sum to 1 within
/// 1e-9; otherwise throws std::invalid_argument.
Counts sample_distribution(const Distribution& distribution, std::size_t shots,
                           std::uint64_t seed);

}  // namespace qmut

