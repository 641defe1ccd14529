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

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace qmut {

using Complex = std::complex<double>;

/// Dense row-major unitary block; dimension 2^arity.
using GateMatrix = std::vector<std::vector<Complex>>;

/// The 20 known gates in catalog order: the 19 mutatable gates
/// (alphabetical) followed by cp, which is simulated but never mutated.
enum class GateId {
    Ccx,
    Cswap,
    Cx,
    Cz,
    H,
    Id,
    P,
    Rx,
    Rxx,
    Ry,
    Rz,
    Rzz,
    S,
    Swap,
    Sx,
    T,
    X,
    Y,
    Z,
    Cp,
};

inline constexpr std::size_t kNumGates = 20;
inline constexpr std::size_t kNumMutatableGates = 19;

/// The seven gate families used to classify mutated gates.
enum class GateType {
    Controlled,
    Hadamard,
    Pauli,
    Phase,
    Rotation,
    Swap,
    T,
};

enum class SizeClass {
    Single,
    Multi,
};

struct GateCatalogEntry {
    GateId id;
    std::string_view name;
    std::size_t arity;
    std::size_t param_count;  // 0 or 1
    GateType gate_type;
    SizeClass size_class;
    bool mutatable;

    /// Unitary on the operand subspace. Basis convention: bit i of the
    /// subspace index holds the value of operand i (operand 0 is the
    /// least significant bit).
    GateMatrix (*unitary)(std::span<const double> params);
};

/// Entry lookup by id; total over the 20 gates.
const GateCatalogEntry& catalog_entry(GateId id);

/// Entry lookup by lowercase gate name; throws std::invalid_argument for
/// names outside the catalog.
const GateCatalogEntry& catalog_entry(std::string_view name);

/// Returns nullptr instead of throwing for unknown names.
const GateCatalogEntry* find_catalog_entry(std::string_view name);

/// All 20 entries in catalog order.
std::span<const GateCatalogEntry> catalog();

std::string_view gate_name(GateId id);
std::string_view gate_type_name(GateType type);
std::string_view size_class_name(SizeClass size);

}  // namespace qmut
