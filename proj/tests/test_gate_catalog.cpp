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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "oracle_helpers.hpp"
#include "qmut/gate_catalog.hpp"

using namespace qmut;

namespace {

double max_abs_diff(const GateMatrix& a, const ref::Matrix& b) {
    double worst = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a.size(); ++c) {
            worst = std::max(worst, std::abs(a[r][c] - b[r][c]));
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("catalog has 20 entries, 19 mutatable, cp excluded") {
    CHECK(catalog().size() == kNumGates);
    std::size_t mutatable = 0;
    for (const auto& entry : catalog()) {
        if (entry.mutatable) ++mutatable;
    }
    CHECK(mutatable == kNumMutatableGates);
    CHECK_FALSE(catalog_entry("cp").mutatable);
    CHECK(catalog_entry("cp").arity == 2);
    CHECK(catalog_entry("cp").param_count == 1);
}

TEST_CASE("mutatable gates are ordered alphabetically, cp last") {
    const auto cat = catalog();
    for (std::size_t i = 0; i + 1 < kNumMutatableGates; ++i) {
        CHECK(cat[i].name < cat[i + 1].name);
    }
    CHECK(cat.back().name == "cp");
}

TEST_CASE("name round-trip and unknown-name handling") {
    for (const auto& entry : catalog()) {
        CHECK(&catalog_entry(entry.name) == &entry);
        CHECK(&catalog_entry(entry.id) == &entry);
        CHECK(gate_name(entry.id) == entry.name);
    }
    CHECK(find_catalog_entry("nope") == nullptr);
    CHECK_THROWS_AS(catalog_entry("nope"), std::invalid_argument);
}

TEST_CASE("gate family and size classification") {
    const std::set<std::string_view> controlled = {"ccx", "cswap", "cx", "cz",
                                                   "cp"};
    const std::set<std::string_view> pauli = {"x", "y", "z", "id"};
    const std::set<std::string_view> phase = {"p", "s", "sx"};
    const std::set<std::string_view> rotation = {"rx", "rxx", "ry", "rz",
                                                 "rzz"};
    for (const auto& entry : catalog()) {
        if (controlled.count(entry.name)) {
            CHECK(entry.gate_type == GateType::Controlled);
        } else if (entry.name == "h") {
            CHECK(entry.gate_type == GateType::Hadamard);
        } else if (pauli.count(entry.name)) {
            CHECK(entry.gate_type == GateType::Pauli);
        } else if (phase.count(entry.name)) {
            CHECK(entry.gate_type == GateType::Phase);
        } else if (rotation.count(entry.name)) {
            CHECK(entry.gate_type == GateType::Rotation);
        } else if (entry.name == "swap") {
            CHECK(entry.gate_type == GateType::Swap);
        } else {
            CHECK(entry.name == "t");
            CHECK(entry.gate_type == GateType::T);
        }
        const SizeClass expected =
            entry.arity == 1 ? SizeClass::Single : SizeClass::Multi;
        CHECK(entry.size_class == expected);
    }
}

TEST_CASE("every unitary matches the reference block") {
    for (const auto& entry : catalog()) {
        const std::vector<double> params =
            entry.param_count ? std::vector<double>{0.7853981633974483}
                              : std::vector<double>{};
        const GateMatrix got = entry.unitary(params);
        const ref::Matrix want = ref::gate_block(entry.id, params);
        CAPTURE(entry.name);
        CHECK(got.size() == (std::size_t{1} << entry.arity));
        CHECK(max_abs_diff(got, want) < 1e-15);
    }
}

TEST_CASE("every unitary is actually unitary") {
    for (const auto& entry : catalog()) {
        const std::vector<double> params =
            entry.param_count ? std::vector<double>{1.234} : std::vector<double>{};
        const GateMatrix m = entry.unitary(params);
        const std::size_t dim = m.size();
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                Complex acc = 0.0;
                for (std::size_t k = 0; k < dim; ++k) {
                    acc += m[k][r] * std::conj(m[k][c]);
                }
                const double want = (r == c) ? 1.0 : 0.0;
                CAPTURE(entry.name);
                CHECK(std::abs(acc - Complex(want)) < 1e-12);
            }
        }
    }
}

TEST_CASE("type and size names") {
    CHECK(gate_type_name(GateType::Controlled) == "Controlled");
    CHECK(gate_type_name(GateType::Hadamard) == "Hadamard");
    CHECK(gate_type_name(GateType::Pauli) == "Pauli");
    CHECK(gate_type_name(GateType::Phase) == "Phase");
    CHECK(gate_type_name(GateType::Rotation) == "Rotation");
    CHECK(gate_type_name(GateType::Swap) == "Swap");
    CHECK(gate_type_name(GateType::T) == "T");
    CHECK(size_class_name(SizeClass::Single) == "Single");
    CHECK(size_class_name(SizeClass::Multi) == "Multi");
}
