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

#include <map>
#include <optional>
#include <string>

#include "qmut/circuit.hpp"
#include "qmut/statevector.hpp"

namespace qmut {

enum class VerdictKind { Survived, KilledWOO, KilledOPO, Stillborn };

std::string_view verdict_kind_name(VerdictKind kind);
VerdictKind verdict_kind_from_name(std::string_view name);

/// Judgement for one mutant.  p_value is present iff the probability oracle
/// was evaluated (diverse-output programs that pass the wrong-output oracle).
struct Verdict {
    VerdictKind kind = VerdictKind::Survived;
    std::optional<double> p_value;

    bool operator==(const Verdict&) const = default;
};

struct OracleConfig {
    double alpha = 0.01;
    std::string dominance_tiebreak = "lexicographic";
};

/// Most frequent outcome; ties resolved to the lexicographically smallest
/// bitstring.  Throws std::invalid_argument on an empty distribution.
std::string dominant_output(const Counts& distribution);

/// Wrong Output Oracle.  Output-dominant programs: killed iff the dominant
/// outcomes differ.  Diverse-output programs: killed iff the observed run
/// contains an outcome absent from the expected run's key set; missing keys
/// never kill.  Returns true when killed.  Throws std::invalid_argument on
/// empty distributions or mismatched bitstring widths.
bool woo_verdict(const Counts& expected, const Counts& observed,
                 const ProgramMeta& meta, const OracleConfig& cfg = {});

/// Upper tail of the chi-square distribution with `df` degrees of freedom at
/// `statistic`, i.e. Q(df/2, statistic/2).  Absolute error below 1e-10.
double chi_square_upper_tail(double statistic, std::size_t df);

/// Goodness-of-fit p-value of `observed` counts against `expected_probs`.
/// chi^2 = sum over expected keys of (O_i - shots*p_i)^2 / (shots*p_i) with
/// O_i = 0 for unobserved keys; df = #expected keys - 1; df = 0 yields 1.0.
/// Expected probabilities must be positive and sum to 1 within 1e-9 (they are
/// renormalised); observed keys outside the expected support are rejected.
/// Throws std::invalid_argument on any precondition violation.
double chi_square_pvalue(const std::map<std::string, double>& expected_probs,
                         const Counts& observed);

struct OpoResult {
    bool killed = false;
    double p_value = 1.0;
};

/// Output Probability Oracle for diverse-output programs: chi-square fit of
/// the observed counts against the expected run's empirical probabilities
/// (expected counts / expected shots).  Killed iff p_value < cfg.alpha.
OpoResult opo_verdict(const Counts& expected, const Counts& observed,
                      const OracleConfig& cfg = {});

/// Combined protocol: WOO first; a diverse-output program that passes WOO is
/// then judged by OPO.  Output-dominant programs never reach OPO, so they can
/// only yield KilledWOO or Survived.
Verdict judge(const Counts& expected, const Counts& observed,
              const ProgramMeta& meta, const OracleConfig& cfg = {});

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

}  // namespace qmut

