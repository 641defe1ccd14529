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
#include <filesystem>
#include <string>
#include <vector>

#include "qmut/analytics.hpp"
#include "qmut/mutation.hpp"
#include "qmut/oracles.hpp"
#include "qmut/recommend.hpp"
#include "qmut/statevector.hpp"

namespace qmut {

/// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPartial = 1;
inline constexpr int kExitUsage = 2;

/// Campaign default seed.  The constant is arbitrary but fixed: every run of
/// a campaign reuses it so executions are reproducible.  123 is chosen so the
/// default Bell reference run lands close to its ideal 50/50 split, keeping
/// the probability oracle's false-kill rate near its nominal significance.
inline constexpr std::uint64_t kDefaultCampaignSeed = 123;

/// How per-execution random streams relate to the campaign seed.  Shared
/// reuses one seed for the original and every mutant, so circuits with
/// identical output distributions yield identical counts and are never
/// falsely killed by sampling noise.  PerMutant derives seed ^ record hash
/// per mutant for independent streams.
enum class SeedPolicy { Shared, PerMutant };

std::string_view seed_policy_name(SeedPolicy policy);
SeedPolicy seed_policy_from_name(std::string_view name);

struct CampaignConfig {
    std::vector<std::string> inputs;
    std::string output_dir = "campaign";
    std::size_t shots = 100000;
    std::uint64_t seed = kDefaultCampaignSeed;
    SeedPolicy seed_policy = SeedPolicy::Shared;
    std::size_t qubit_cap = kDefaultQubitCap;
    std::size_t threads = 1;
    EnumerationConfig enumeration;
    OracleConfig oracle;
};

/// Program metadata defaults for MQT-style circuit names ("<algorithm>_<n>"):
/// the algorithm's group per the 12-group catalog and its output-dominance
/// class.  Unknown algorithms default to a group equal to the algorithm name
/// and dominant output.
ProgramMeta default_program_meta(const std::string& circuit_name);

/// Loads circuits from files and directories (non-recursive *.qasm scan,
/// sorted by filename).  Circuit names are file stems.  Program metadata
/// comes from default_program_meta, overridden by an optional manifest.json
/// next to the circuit file ({"circuits": {"<name>": {"algorithm": ...,
/// "algorithm_group": ..., "output_dominance": "dominant"|"diverse"}}}).
/// Unreadable or unparseable files are reported into `errors` and skipped.
struct LoadedCircuit {
    Circuit circuit;
    std::filesystem::path source;
};
std::vector<LoadedCircuit> load_corpus(const std::vector<std::string>& inputs,
                                       std::vector<std::string>& errors);

/// Enumerates mutants for every input circuit, writes each mutant's QASM
/// under <output_dir>/mutants/ and the spec store to
/// <output_dir>/specs.jsonl.
int cmd_generate(const CampaignConfig& cfg);

/// Executes and judges every spec in <output_dir>/specs.jsonl, writing
/// <output_dir>/records.jsonl sorted by id.  Existing records are kept and
/// their specs skipped, so interrupted runs resume.  Per-mutant failures
/// become Stillborn records with a reason.
int cmd_run(const CampaignConfig& cfg);

struct AnalyzeOptions {
    std::string store;
    std::string output_dir = "reports";
    std::vector<std::vector<IndependentVariable>> groupings;
    std::size_t top_k = 0;   // 0: no ranked report
    bool heatmaps = false;   // heatmap JSON for 2-way groupings
    bool correlations = false;
};

/// Writes one survival-rate CSV per grouping (plus optional ranked CSV and
/// heatmap JSON) and the complexity-correlation report.
int cmd_analyze(const AnalyzeOptions& opts);

struct RecommendOptions {
    std::string store;
    RecommendQuery query;
    std::string manifest_path = "recommendation.json";
    /// Directory holding the campaign's mutants/ folder; used to resolve and
    /// optionally copy mutant QASM files.
    std::string campaign_dir;
    std::string copy_dir;  // empty: no copies
};

/// Runs the recommender and writes a manifest with ids, file paths, and the
/// set-level survival rate.
int cmd_recommend(const RecommendOptions& opts);

}  // namespace qmut
