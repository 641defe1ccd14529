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

#include "qmut/oracles.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qmut {

namespace {

constexpr int kMaxIterations = 500;
constexpr double kEpsilon = 1e-15;

// Series expansion of P(a, x); converges fastest for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double term = sum;
    for (int i = 0; i < kMaxIterations; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEpsilon) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a, x); converges fastest for x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / kEpsilon;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIterations; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEpsilon) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

void check_tiebreak(const OracleConfig& cfg) {
    if (cfg.dominance_tiebreak != "lexicographic") {
        throw std::invalid_argument("unknown dominance tie-break rule '" +
                                    cfg.dominance_tiebreak + "'");
    }
}

std::size_t bitstring_width(const Counts& counts, const char* label) {
    if (counts.empty()) {
        throw std::invalid_argument(std::string(label) + " distribution is empty");
    }
    const std::size_t width = counts.begin()->first.size();
    for (const auto& [key, count] : counts) {
        if (key.size() != width) {
            throw std::invalid_argument(std::string(label) +
                                        " distribution mixes bitstring widths");
        }
    }
    return width;
}

}  // namespace

std::string_view verdict_kind_name(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::Survived: return "Survived";
        case VerdictKind::KilledWOO: return "KilledWOO";
        case VerdictKind::KilledOPO: return "KilledOPO";
        case VerdictKind::Stillborn: return "Stillborn";
    }
    throw std::invalid_argument("invalid verdict kind");
}

VerdictKind verdict_kind_from_name(std::string_view name) {
    if (name == "Survived") return VerdictKind::Survived;
    if (name == "KilledWOO") return VerdictKind::KilledWOO;
    if (name == "KilledOPO") return VerdictKind::KilledOPO;
    if (name == "Stillborn") return VerdictKind::Stillborn;
    throw std::invalid_argument("unknown verdict '" + std::string(name) + "'");
}

double regularized_gamma_p(double a, double x) {
    if (a <= 0.0) throw std::domain_error("gamma shape must be positive");
    if (x < 0.0) throw std::domain_error("gamma argument must be non-negative");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_continued_fraction(a, x);
}

double regularized_gamma_q(double a, double x) {
    if (a <= 0.0) throw std::domain_error("gamma shape must be positive");
    if (x < 0.0) throw std::domain_error("gamma argument must be non-negative");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_continued_fraction(a, x);
}

double chi_square_upper_tail(double statistic, std::size_t df) {
    if (statistic < 0.0) {
        throw std::domain_error("chi-square statistic must be non-negative");
    }
    if (df == 0) return 1.0;
    return regularized_gamma_q(static_cast<double>(df) / 2.0, statistic / 2.0);
}

std::string dominant_output(const Counts& distribution) {
    if (distribution.empty()) {
        throw std::invalid_argument("dominant_output: empty distribution");
    }
    // Map iteration is key-ascending, so a strict comparison settles ties in
    // favour of the lexicographically smallest bitstring.
    auto best = distribution.begin();
    for (auto it = std::next(best); it != distribution.end(); ++it) {
        if (it->second > best->second) best = it;
    }
    return best->first;
}

bool woo_verdict(const Counts& expected, const Counts& observed,
                 const ProgramMeta& meta, const OracleConfig& cfg) {
    check_tiebreak(cfg);
    const std::size_t expected_width = bitstring_width(expected, "expected");
    const std::size_t observed_width = bitstring_width(observed, "observed");
    if (expected_width != observed_width) {
        throw std::invalid_argument(
            "bitstring width mismatch: expected " +
            std::to_string(expected_width) + ", observed " +
            std::to_string(observed_width));
    }
    if (meta.output_dominance == OutputDominance::OutputDominant) {
        return dominant_output(observed) != dominant_output(expected);
    }
    for (const auto& [key, count] : observed) {
        if (count > 0 && expected.find(key) == expected.end()) return true;
    }
    return false;
}

double chi_square_pvalue(const std::map<std::string, double>& expected_probs,
                         const Counts& observed) {
    if (expected_probs.empty()) {
        throw std::invalid_argument("chi_square_pvalue: empty expected support");
    }
    if (observed.empty()) {
        throw std::invalid_argument("chi_square_pvalue: empty observed counts");
    }
    double total = 0.0;
    for (const auto& [key, p] : expected_probs) {
        if (p <= 0.0) {
            throw std::invalid_argument("non-positive expected probability for '" +
                                        key + "'");
        }
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("expected probabilities sum to " +
                                    std::to_string(total) + ", expected 1");
    }
    std::uint64_t shots = 0;
    for (const auto& [key, count] : observed) {
        if (expected_probs.find(key) == expected_probs.end()) {
            throw std::invalid_argument("observed key '" + key +
                                        "' absent from expected support");
        }
        shots += count;
    }
    if (shots == 0) {
        throw std::invalid_argument("chi_square_pvalue: zero observed shots");
    }
    const std::size_t df = expected_probs.size() - 1;
    if (df == 0) return 1.0;

    double statistic = 0.0;
    for (const auto& [key, p] : expected_probs) {
        const auto it = observed.find(key);
        const double o = it == observed.end()
                             ? 0.0
                             : static_cast<double>(it->second);
        const double e = static_cast<double>(shots) * (p / total);
        const double diff = o - e;
        statistic += diff * diff / e;
    }
    return chi_square_upper_tail(statistic, df);
}

OpoResult opo_verdict(const Counts& expected, const Counts& observed,
                      const OracleConfig& cfg) {
    std::uint64_t expected_shots = 0;
    for (const auto& [key, count] : expected) expected_shots += count;
    if (expected_shots == 0) {
        throw std::invalid_argument("opo_verdict: empty expected counts");
    }
    std::map<std::string, double> expected_probs;
    for (const auto& [key, count] : expected) {
        if (count > 0) {
            expected_probs[key] =
                static_cast<double>(count) / static_cast<double>(expected_shots);
        }
    }
    OpoResult result;
    result.p_value = chi_square_pvalue(expected_probs, observed);
    result.killed = result.p_value < cfg.alpha;
    return result;
}

Verdict judge(const Counts& expected, const Counts& observed,
              const ProgramMeta& meta, const OracleConfig& cfg) {
    if (woo_verdict(expected, observed, meta, cfg)) {
        return Verdict{VerdictKind::KilledWOO, std::nullopt};
    }
    if (meta.output_dominance == OutputDominance::DiverseOutput) {
        const OpoResult opo = opo_verdict(expected, observed, cfg);
        return Verdict{opo.killed ? VerdictKind::KilledOPO : VerdictKind::Survived,
                       opo.p_value};
    }
    return Verdict{VerdictKind::Survived, std::nullopt};
}

}  // namespace qmut
