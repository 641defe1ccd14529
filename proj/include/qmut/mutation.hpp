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

#include <optional>
#include <string>
#include <vector>

#include "qmut/circuit.hpp"
#include "qmut/gate_catalog.hpp"

namespace qmut {

enum class MutationOperator { Add, Remove, Replace };

std::string_view mutation_operator_name(MutationOperator op);
MutationOperator mutation_operator_from_name(std::string_view name);

/// One planned mutation of an origin circuit.
///
/// `gate` is the manipulated gate: the inserted gate for Add, the removed
/// gate for Remove, and the new gate for Replace.  `operands` carry the
/// insertion targets for Add and the original gate's qubits for Replace;
/// Remove needs none.  The trailing labels are derived from the catalog and
/// the origin circuit and are filled in by the enumeration functions.
struct MutantSpec {
    std::string origin;
    MutationOperator op = MutationOperator::Add;
    GateId gate = GateId::Id;
    std::size_t position = 0;
    std::vector<std::size_t> operands;
    std::vector<double> params;

    GateType gate_type = GateType::Pauli;
    SizeClass gate_size = SizeClass::Single;
    int position_bucket = 0;

    bool operator==(const MutantSpec&) const = default;
};

/// Operand assignment rule for Add mutants.  Anchor derives one tuple per
/// (insertion point, gate) from the neighbouring gate; Exhaustive emits every
/// ordered tuple of distinct qubits.
enum class OperandStrategy { Anchor, Exhaustive };

inline constexpr double kDefaultAngle = 1.5707963267948966;  // pi/2

struct EnumerationConfig {
    OperandStrategy operand_strategy = OperandStrategy::Anchor;
    double default_angle = kDefaultAngle;
    std::optional<std::size_t> max_mutants_per_circuit;
    /// Empty filters select everything.  Filters and the cap are applied by
    /// enumerate_mutants; the per-operator functions emit their full lists.
    std::vector<MutationOperator> operator_filter;
    std::vector<GateId> gate_filter;
    std::vector<std::size_t> position_filter;
};

/// Add mutants: for each insertion point 0..N (N appends) and each mutatable
/// gate whose arity fits the circuit, one spec per operand tuple.  Anchor
/// tuples start from the operands of the gate at the insertion point (the
/// last gate when inserting at N), truncated to the inserted gate's arity or
/// extended with the next distinct qubit indices cyclically.  Parameterized
/// gates receive [default_angle].  Ordered by (position, catalog order,
/// operand tuple).
std::vector<MutantSpec> enumerate_add(const Circuit& circuit,
                                      const EnumerationConfig& cfg = {});

/// Remove mutants: one spec per mutatable gate position, in position order.
std::vector<MutantSpec> enumerate_remove(const Circuit& circuit);

/// Replace mutants: for each mutatable gate, one spec per same-arity
/// mutatable catalog gate with a different name.  Operands are copied from
/// the original gate; params are copied when both gates are parameterized,
/// else [default_angle] when the new gate needs one.  Ordered by (position,
/// catalog order).
std::vector<MutantSpec> enumerate_replace(const Circuit& circuit,
                                          const EnumerationConfig& cfg = {});

/// Full enumeration: Add then Remove then Replace, with the config's
/// operator/gate/position filters applied and the optional per-circuit cap
/// truncating the combined list.
std::vector<MutantSpec> enumerate_mutants(const Circuit& circuit,
                                          const EnumerationConfig& cfg = {});

/// Materializes the mutant circuit.  Throws std::invalid_argument or
/// std::out_of_range when the spec is inconsistent with the circuit (caller
/// records such mutants as Stillborn).  The result keeps the origin's
/// metadata and is named after mutant_label(spec).
Circuit apply_mutation(const Circuit& circuit, const MutantSpec& spec);

/// "<origin>__<operator>_<gate>_<position>" plus "_<q0>-<q1>..." for Add
/// specs, whose operand tuple is not implied by the position.
std::string mutant_label(const MutantSpec& spec);

/// mutant_label + ".qasm"
std::string mutant_filename(const MutantSpec& spec);

/// Stable 64-bit FNV-1a hash (16 hex digits) of the identifying fields
/// (origin, operator, gate, position, operands, params).  Used as the record
/// store key, so it must never depend on derived labels.
std::string mutant_record_id(const MutantSpec& spec);

}  // namespace qmut

