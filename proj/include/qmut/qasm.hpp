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
#include <stdexcept>
#include <string>

#include "qmut/circuit.hpp"

namespace qmut {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Parses an OPENQASM 2.0 subset: qreg/creg declarations, the catalog
/// gates, measure, barrier, comments. Registers are flattened to global
/// qubit/clbit indices in declaration order. Barriers are skipped and do
/// not consume positions. Measurements must come after all gates.
///
/// Parameter expressions support numbers, pi, + - * / and parentheses.
Circuit parse_qasm(const std::string& source, const std::string& name = "circuit");

/// Deterministic serialization: one flattened q/c register pair, one
/// statement per line, LF endings, parameters printed with 17 significant
/// digits. parse_qasm(serialize_qasm(c)) is structurally equal to c.
std::string serialize_qasm(const Circuit& circuit);

}  // namespace qmut
