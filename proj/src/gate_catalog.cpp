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

#include "qmut/gate_catalog.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qmut {

namespace {

using std::polar;

constexpr Complex kI{0.0, 1.0};

GateMatrix identity(std::size_t dim) {
    GateMatrix m(dim, std::vector<Complex>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
    return m;
}

// Permutation gate: column c maps to row perm(c) with amplitude 1.
template <typename Perm>
GateMatrix permutation(std::size_t dim, Perm perm) {
    GateMatrix m(dim, std::vector<Complex>(dim, 0.0));
    for (std::size_t c = 0; c < dim; ++c) m[perm(c)][c] = 1.0;
    return m;
}

GateMatrix u_h(std::span<const double>) {
    const double s = 1.0 / std::sqrt(2.0);
    return {{s, s}, {s, -s}};
}

GateMatrix u_id(std::span<const double>) { return identity(2); }

GateMatrix u_x(std::span<const double>) { return {{0.0, 1.0}, {1.0, 0.0}}; }

GateMatrix u_y(std::span<const double>) { return {{0.0, -kI}, {kI, 0.0}}; }

GateMatrix u_z(std::span<const double>) { return {{1.0, 0.0}, {0.0, -1.0}}; }

GateMatrix u_s(std::span<const double>) { return {{1.0, 0.0}, {0.0, kI}}; }

GateMatrix u_t(std::span<const double>) {
    return {{1.0, 0.0}, {0.0, polar(1.0, M_PI / 4.0)}};
}

GateMatrix u_sx(std::span<const double>) {
    const Complex a{0.5, 0.5};
    const Complex b{0.5, -0.5};
    return {{a, b}, {b, a}};
}

GateMatrix u_p(std::span<const double> params) {
    return {{1.0, 0.0}, {0.0, polar(1.0, params[0])}};
}

GateMatrix u_rx(std::span<const double> params) {
    const double c = std::cos(params[0] / 2.0);
    const double s = std::sin(params[0] / 2.0);
    return {{c, -kI * s}, {-kI * s, c}};
}

GateMatrix u_ry(std::span<const double> params) {
    const double c = std::cos(params[0] / 2.0);
    const double s = std::sin(params[0] / 2.0);
    return {{c, -s}, {s, c}};
}

GateMatrix u_rz(std::span<const double> params) {
    return {{polar(1.0, -params[0] / 2.0), 0.0},
            {0.0, polar(1.0, params[0] / 2.0)}};
}

// Two-qubit index convention: operand 0 is bit 0 of the subspace index.
GateMatrix u_cx(std::span<const double>) {
    // control = bit 0, target = bit 1
    return permutation(4, [](std::size_t c) {
        return (c & 1u) ? (c ^ 2u) : c;
    });
}

GateMatrix u_cz(std::span<const double>) {
    GateMatrix m = identity(4);
    m[3][3] = -1.0;
    return m;
}

GateMatrix u_swap(std::span<const double>) {
    return permutation(4, [](std::size_t c) {
        const std::size_t b0 = c & 1u, b1 = (c >> 1) & 1u;
        return (c & ~3u) | (b0 << 1) | b1;
    });
}

GateMatrix u_cp(std::span<const double> params) {
    GateMatrix m = identity(4);
    m[3][3] = polar(1.0, params[0]);
    return m;
}

GateMatrix u_rxx(std::span<const double> params) {
    const double c = std::cos(params[0] / 2.0);
    const Complex s = -kI * std::sin(params[0] / 2.0);
    GateMatrix m(4, std::vector<Complex>(4, 0.0));
    for (std::size_t j = 0; j < 4; ++j) {
        m[j][j] = c;
        m[j ^ 3u][j] = s;  // X⊗X flips both bits
    }
    return m;
}

GateMatrix u_rzz(std::span<const double> params) {
    GateMatrix m(4, std::vector<Complex>(4, 0.0));
    for (std::size_t j = 0; j < 4; ++j) {
        const bool even = ((j & 1u) ^ ((j >> 1) & 1u)) == 0;
        m[j][j] = polar(1.0, even ? -params[0] / 2.0 : params[0] / 2.0);
    }
    return m;
}

GateMatrix u_ccx(std::span<const double>) {
    // controls = bits 0,1; target = bit 2
    return permutation(8, [](std::size_t c) {
        return ((c & 3u) == 3u) ? (c ^ 4u) : c;
    });
}

GateMatrix u_cswap(std::span<const double>) {
    // control = bit 0; swapped pair = bits 1,2
    return permutation(8, [](std::size_t c) {
        if ((c & 1u) == 0) return c;
        const std::size_t b1 = (c >> 1) & 1u, b2 = (c >> 2) & 1u;
        return (c & ~6u) | (b1 << 2) | (b2 << 1);
    });
}

constexpr std::array<GateCatalogEntry, kNumGates> kCatalog{{
    {GateId::Ccx, "ccx", 3, 0, GateType::Controlled, SizeClass::Multi, true, u_ccx},
    {GateId::Cswap, "cswap", 3, 0, GateType::Controlled, SizeClass::Multi, true, u_cswap},
    {GateId::Cx, "cx", 2, 0, GateType::Controlled, SizeClass::Multi, true, u_cx},
    {GateId::Cz, "cz", 2, 0, GateType::Controlled, SizeClass::Multi, true, u_cz},
    {GateId::H, "h", 1, 0, GateType::Hadamard, SizeClass::Single, true, u_h},
    {GateId::Id, "id", 1, 0, GateType::Pauli, SizeClass::Single, true, u_id},
    {GateId::P, "p", 1, 1, GateType::Phase, SizeClass::Single, true, u_p},
    {GateId::Rx, "rx", 1, 1, GateType::Rotation, SizeClass::Single, true, u_rx},
    {GateId::Rxx, "rxx", 2, 1, GateType::Rotation, SizeClass::Multi, true, u_rxx},
    {GateId::Ry, "ry", 1, 1, GateType::Rotation, SizeClass::Single, true, u_ry},
    {GateId::Rz, "rz", 1, 1, GateType::Rotation, SizeClass::Single, true, u_rz},
    {GateId::Rzz, "rzz", 2, 1, GateType::Rotation, SizeClass::Multi, true, u_rzz},
    {GateId::S, "s", 1, 0, GateType::Phase, SizeClass::Single, true, u_s},
    {GateId::Swap, "swap", 2, 0, GateType::Swap, SizeClass::Multi, true, u_swap},
    {GateId::Sx, "sx", 1, 0, GateType::Phase, SizeClass::Single, true, u_sx},
    {GateId::T, "t", 1, 0, GateType::T, SizeClass::Single, true, u_t},
    {GateId::X, "x", 1, 0, GateType::Pauli, SizeClass::Single, true, u_x},
    {GateId::Y, "y", 1, 0, GateType::Pauli, SizeClass::Single, true, u_y},
    {GateId::Z, "z", 1, 0, GateType::Pauli, SizeClass::Single, true, u_z},
    {GateId::Cp, "cp", 2, 1, GateType::Controlled, SizeClass::Multi, false, u_cp},
}};

}  // namespace

const GateCatalogEntry& catalog_entry(GateId id) {
    return kCatalog[static_cast<std::size_t>(id)];
}

const GateCatalogEntry* find_catalog_entry(std::string_view name) {
    for (const auto& entry : kCatalog) {
        if (entry.name == name) return &entry;
    }
    return nullptr;
}

const GateCatalogEntry& catalog_entry(std::string_view name) {
    const GateCatalogEntry* entry = find_catalog_entry(name);
    if (entry == nullptr) {
        throw std::invalid_argument("unknown gate: " + std::string(name));
    }
    return *entry;
}

std::span<const GateCatalogEntry> catalog() { return kCatalog; }

std::string_view gate_name(GateId id) { return catalog_entry(id).name; }

std::string_view gate_type_name(GateType type) {
    switch (type) {
        case GateType::Controlled: return "Controlled";
        case GateType::Hadamard: return "Hadamard";
        case GateType::Pauli: return "Pauli";
        case GateType::Phase: return "Phase";
        case GateType::Rotation: return "Rotation";
        case GateType::Swap: return "Swap";
        case GateType::T: return "T";
    }
    return "?";
}

std::string_view size_class_name(SizeClass size) {
    return size == SizeClass::Single ? "Single" : "Multi";
}

}  // namespace qmut
