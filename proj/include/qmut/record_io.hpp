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

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "qmut/analytics.hpp"
#include "qmut/mutation.hpp"

namespace qmut {

/// One-line JSON for a planned mutant (id + MutantSpec fields), fixed key
/// order.
std::string spec_to_line(const std::string& id, const MutantSpec& spec);
std::pair<std::string, MutantSpec> spec_from_line(const std::string& line);

/// One-line JSON for a judged mutant, fixed key order.  p_value serializes
/// as null when the probability oracle was not evaluated.
std::string record_to_line(const MutantRecord& record);
MutantRecord record_from_line(const std::string& line);

/// Reads a JSONL spec store; a missing file yields an empty list.  Throws
/// std::runtime_error naming the offending line on malformed input.
std::vector<std::pair<std::string, MutantSpec>> read_spec_store(
    const std::filesystem::path& path);

/// Writes the spec store sorted by id, atomically (temp file + rename).
void write_spec_store(const std::filesystem::path& path,
                      std::vector<std::pair<std::string, MutantSpec>> specs);

/// Reads a JSONL record store; a missing file yields an empty list.
std::vector<MutantRecord> read_record_store(const std::filesystem::path& path);

/// Writes the record store sorted by id, atomically.  Sorted output makes
/// reruns and resumed runs byte-comparable.
void write_record_store(const std::filesystem::path& path,
                        std::vector<MutantRecord> records);

}  // namespace qmut
