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
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "oracle_helpers.hpp"
#include "qmut/qasm.hpp"
#include "qmut/statevector.hpp"

using namespace qmut;

namespace {

Circuit ghz(std::size_t n) {
    Circuit c("ghz", n, n);
    c.append_gate(GateId::H, {0});
    for (std::size_t i = 0; i + 1 < n; ++i) {
        c.append_gate(GateId::Cx, {i, i + 1});
    }
    for (std::size_t i = 0; i < n; ++i) c.add_measurement(i, i);
    return c;
}

Circuit random_circuit(std::mt19937_64& eng, std::size_t n,
                       std::size_t gates) {
    Circuit c("rand", n, n);
    for (std::size_t g = 0; g < gates; ++g) {
        const auto& entry = catalog()[eng() % catalog().size()];
        if (entry.arity > n) continue;
        std::vector<std::size_t> all(n);
        std::iota(all.begin(), all.end(), 0);
        for (std::size_t i = 0; i < entry.arity; ++i) {
            std::swap(all[i], all[i + eng() % (n - i)]);
        }
        std::vector<std::size_t> ops(all.begin(), all.begin() + entry.arity);
        std::vector<double> params;
        if (entry.param_count) {
            params.push_back(-3.0 + 6.0 * (eng() % 1000) / 1000.0);
        }
        c.append_gate(entry.id, ops, params);
    }
    for (std::size_t i = 0; i < n; ++i) c.add_measurement(i, i);
    return c;
}

}  // namespace

TEST_CASE("bell state amplitudes") {
    const auto state = run_statevector(ghz(2));
    REQUIRE(state.size() == 4);
    const double a = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(state[0] - Complex(a)) < 1e-15);
    CHECK(std::abs(state[1]) < 1e-15);
    CHECK(std::abs(state[2]) < 1e-15);
    CHECK(std::abs(state[3] - Complex(a)) < 1e-15);
}

TEST_CASE("ghz family has exactly two nonzero amplitudes") {
    for (std::size_t n = 2; n <= 10; ++n) {
        const auto state = run_statevector(ghz(n));
        const double a = 1.0 / std::sqrt(2.0);
        CAPTURE(n);
        CHECK(std::abs(state.front() - Complex(a)) < 1e-10);
        CHECK(std::abs(state.back() - Complex(a)) < 1e-10);
        for (std::size_t i = 1; i + 1 < state.size(); ++i) {
            CHECK(std::abs(state[i]) < 1e-10);
        }
    }
}

TEST_CASE("x gate flips the sampled key deterministically") {
    Circuit c("flip", 1, 1);
    c.append_gate(GateId::X, {0});
    c.add_measurement(0, 0);
    const Counts counts = sample_shots(c, 1000, 9);
    REQUIRE(counts.size() == 1);
    CHECK(counts.at("1") == 1000);
}

TEST_CASE("key convention: clbit 0 is the rightmost character") {
    Circuit c("conv", 3, 3);
    c.append_gate(GateId::X, {2});
    c.add_measurement(0, 0);
    c.add_measurement(1, 1);
    c.add_measurement(2, 2);
    const Distribution d = measured_distribution(c);
    REQUIRE(d.size() == 1);
    CHECK(d.count("100") == 1);
}

TEST_CASE("unmeasured qubits are marginalised") {
    Circuit c("marg", 2, 1);
    c.append_gate(GateId::H, {0});
    c.append_gate(GateId::Cx, {0, 1});
    c.add_measurement(1, 0);
    const Distribution d = measured_distribution(c);
    REQUIRE(d.size() == 2);
    CHECK(d.at("0") == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d.at("1") == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("measured distributions match the full-matrix reference") {
    std::mt19937_64 eng(2026);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + eng() % 4;
        const Circuit c = random_circuit(eng, n, 4 + eng() % 12);
        const Distribution got = measured_distribution(c);
        const auto want = ref::distribution(c);
        CAPTURE(trial);
        for (const auto& [key, p] : want) {
            if (p < 1e-12) continue;
            CHECK(got.at(key) == doctest::Approx(p).epsilon(1e-9));
        }
        double total = 0.0;
        for (const auto& [key, p] : got) total += p;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("corpus circuits match the reference simulator") {
    for (const auto& entry :
         std::filesystem::directory_iterator(QMUT_CORPUS_DIR)) {
        if (entry.path().extension() != ".qasm") continue;
        std::ifstream in(entry.path());
        std::stringstream ss;
        ss << in.rdbuf();
        const Circuit c = parse_qasm(ss.str(), entry.path().stem().string());
        const Distribution got = measured_distribution(c);
        const auto want = ref::distribution(c);
        CAPTURE(entry.path().filename().string());
        REQUIRE(got.size() == want.size());
        for (const auto& [key, p] : want) {
            CHECK(got.at(key) == doctest::Approx(p).epsilon(1e-9));
        }
    }
}

TEST_CASE("sampling matches exact probabilities at large shot counts") {
    const Counts counts = sample_shots(ghz(2), 100000, 7);
    std::uint64_t total = 0;
    for (const auto& [key, n] : counts) total += n;
    CHECK(total == 100000);
    CHECK(std::abs(static_cast<double>(counts.at("00")) / 100000.0 - 0.5) <
          0.01);
    CHECK(std::abs(static_cast<double>(counts.at("11")) / 100000.0 - 0.5) <
          0.01);
}

TEST_CASE("identical seeds reproduce identical counts") {
    const Counts a = sample_shots(ghz(3), 5000, 77);
    const Counts b = sample_shots(ghz(3), 5000, 77);
    const Counts c = sample_shots(ghz(3), 5000, 78);
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("circuits with identical distributions sample identically") {
    // A cz insertion flips amplitude signs only, so the distribution, its
    // iteration order, and therefore the drawn counts are bit-identical.
    Circuit plain = ghz(3);
    Circuit with_cz("ghz_cz", 3, 3);
    with_cz.append_gate(GateId::H, {0});
    with_cz.append_gate(GateId::Cx, {0, 1});
    with_cz.append_gate(GateId::Cz, {0, 1});
    with_cz.append_gate(GateId::Cx, {1, 2});
    for (std::size_t i = 0; i < 3; ++i) with_cz.add_measurement(i, i);
    CHECK(sample_shots(plain, 20000, 5) == sample_shots(with_cz, 20000, 5));
}

TEST_CASE("sample_distribution validates its input") {
    CHECK_THROWS_AS(sample_distribution({{"0", 0.6}, {"1", 0.3}}, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(sample_distribution({{"0", 1.2}, {"1", -0.2}}, 10, 1),
                    std::invalid_argument);
    const Counts c = sample_distribution({{"0", 0.5}, {"1", 0.5}}, 100, 1);
    std::uint64_t total = 0;
    for (const auto& [key, n] : c) total += n;
    CHECK(total == 100);
}

TEST_CASE("qubit cap rejects oversized circuits") {
    Circuit wide("wide", 17, 0);
    CHECK_THROWS_AS(run_statevector(wide), std::domain_error);
    CHECK_NOTHROW(run_statevector(wide, 17));
    Circuit ok("ok", 16, 0);
    CHECK_NOTHROW(run_statevector(ok));
}

TEST_CASE("zero-probability outcomes are omitted from distributions") {
    Circuit c("z", 2, 2);
    c.append_gate(GateId::X, {0});
    c.add_measurement(0, 0);
    c.add_measurement(1, 1);
    const Distribution d = measured_distribution(c);
    CHECK(d.size() == 1);
    CHECK(d.count("01") == 1);
}
