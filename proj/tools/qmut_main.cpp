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

#include <algorithm>
#include <cctype>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmut/campaign.hpp"

namespace {

using namespace qmut;

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

MutationOperator parse_operator(const std::string& name) {
    const std::string n = lower(name);
    if (n == "add") return MutationOperator::Add;
    if (n == "remove") return MutationOperator::Remove;
    if (n == "replace") return MutationOperator::Replace;
    throw std::invalid_argument("unknown mutation operator '" + name + "'");
}

GateType parse_gate_type(const std::string& name) {
    const std::string n = lower(name);
    for (const GateType type :
         {GateType::Controlled, GateType::Hadamard, GateType::Pauli,
          GateType::Phase, GateType::Rotation, GateType::Swap, GateType::T}) {
        if (n == lower(std::string(gate_type_name(type)))) return type;
    }
    throw std::invalid_argument("unknown gate type '" + name + "'");
}

SizeClass parse_gate_size(const std::string& name) {
    const std::string n = lower(name);
    if (n == "single") return SizeClass::Single;
    if (n == "multi") return SizeClass::Multi;
    throw std::invalid_argument("unknown gate size '" + name + "'");
}

OutputDominance parse_dominance_flag(const std::string& name) {
    const std::string n = lower(name);
    if (n == "dominant" || n == "outputdominant") {
        return OutputDominance::OutputDominant;
    }
    if (n == "diverse" || n == "diverseoutput") {
        return OutputDominance::DiverseOutput;
    }
    throw std::invalid_argument("unknown output dominance '" + name + "'");
}

/// Raw string-valued options shared by generate and run; converted into a
/// CampaignConfig after parsing so conversion errors carry clear messages.
struct CampaignFlags {
    CampaignConfig cfg;
    std::string seed_policy = "shared";
    std::string strategy = "anchor";
    std::size_t max_mutants = 0;  // 0: unlimited
    std::vector<std::string> operators;
    std::vector<std::string> gates;
    std::vector<std::size_t> positions;
};

void add_campaign_options(CLI::App* cmd, CampaignFlags& flags) {
    cmd->add_option("-i,--input", flags.cfg.inputs,
                    "Circuit files or directories (*.qasm)")
        ->required();
    cmd->add_option("-o,--out", flags.cfg.output_dir,
                    "Campaign output directory");
    cmd->add_option("--shots", flags.cfg.shots, "Shots per execution")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", flags.cfg.seed, "Campaign random seed");
    cmd->add_option("--seed-policy", flags.seed_policy,
                    "shared: one seed for originals and mutants; per_mutant: "
                    "seed xor mutant hash");
    cmd->add_option("--qubit-cap", flags.cfg.qubit_cap,
                    "Largest circuit width the simulator accepts");
    cmd->add_option("--threads", flags.cfg.threads, "Worker threads")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--alpha", flags.cfg.oracle.alpha,
                    "Probability-oracle significance level")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--strategy", flags.strategy,
                    "Add-operand strategy: anchor or exhaustive");
    cmd->add_option("--angle", flags.cfg.enumeration.default_angle,
                    "Angle for inserted parameterized gates (radians)");
    cmd->add_option("--max-mutants", flags.max_mutants,
                    "Cap on mutants per circuit (0: unlimited)");
    cmd->add_option("--operators", flags.operators,
                    "Mutation operators to enumerate (Add,Remove,Replace)")
        ->delimiter(',');
    cmd->add_option("--gates", flags.gates, "Gates to enumerate")
        ->delimiter(',');
    cmd->add_option("--positions", flags.positions, "Positions to mutate")
        ->delimiter(',');
    cmd->set_config("--config", "",
                    "Read options from a key=value config file");
}

CampaignConfig resolve_campaign(const CampaignFlags& flags) {
    CampaignConfig cfg = flags.cfg;
    cfg.seed_policy = seed_policy_from_name(lower(flags.seed_policy));
    const std::string strategy = lower(flags.strategy);
    if (strategy == "anchor") {
        cfg.enumeration.operand_strategy = OperandStrategy::Anchor;
    } else if (strategy == "exhaustive") {
        cfg.enumeration.operand_strategy = OperandStrategy::Exhaustive;
    } else {
        throw std::invalid_argument("unknown operand strategy '" +
                                    flags.strategy + "'");
    }
    if (flags.max_mutants > 0) {
        cfg.enumeration.max_mutants_per_circuit = flags.max_mutants;
    }
    for (const std::string& name : flags.operators) {
        cfg.enumeration.operator_filter.push_back(parse_operator(name));
    }
    for (const std::string& name : flags.gates) {
        cfg.enumeration.gate_filter.push_back(catalog_entry(name).id);
    }
    cfg.enumeration.position_filter = flags.positions;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gate-level mutation analysis for quantum circuits"};
    app.require_subcommand(1);

    CampaignFlags generate_flags;
    CLI::App* generate =
        app.add_subcommand("generate", "Enumerate mutants and write QASM");
    add_campaign_options(generate, generate_flags);

    CampaignFlags run_flags;
    CLI::App* run =
        app.add_subcommand("run", "Execute and judge generated mutants");
    add_campaign_options(run, run_flags);

    AnalyzeOptions analyze_opts;
    std::vector<std::string> group_args;
    CLI::App* analyze =
        app.add_subcommand("analyze", "Aggregate a record store into reports");
    analyze->add_option("-s,--store", analyze_opts.store,
                        "Record store (records.jsonl)")
        ->required();
    analyze->add_option("-o,--out", analyze_opts.output_dir,
                        "Report output directory");
    analyze
        ->add_option("-g,--group", group_args,
                     "Grouping of 1-3 comma-separated variables (repeatable): "
                     "operator, gate, gate_type, gate_size, position_bucket, "
                     "algorithm, algorithm_group, output_dominance")
        ->required();
    analyze->add_option("--top", analyze_opts.top_k,
                        "Also write the top-K ranked cells per grouping");
    analyze->add_flag("--heatmaps", analyze_opts.heatmaps,
                      "Write heatmap JSON for two-variable groupings");
    analyze->add_flag("--correlations", analyze_opts.correlations,
                      "Write circuit-complexity correlation report");
    analyze->set_config("--config", "",
                        "Read options from a key=value config file");

    RecommendOptions rec_opts;
    std::string rec_algorithm, rec_group, rec_dominance, rec_sr = "0:1";
    std::vector<std::string> rec_operators, rec_gates, rec_types, rec_sizes;
    std::vector<int> rec_buckets;
    CLI::App* recommend =
        app.add_subcommand("recommend", "Select mutants in a target "
                                        "survival-rate band");
    recommend->add_option("-s,--store", rec_opts.store,
                          "Record store (records.jsonl)")
        ->required();
    recommend->add_option("--algorithm", rec_algorithm,
                          "Scope: one algorithm");
    recommend->add_option("--algorithm-group", rec_group,
                          "Scope: one algorithm group");
    recommend->add_option("--dominance", rec_dominance,
                          "Scope: dominant or diverse programs");
    recommend->add_option("--operators", rec_operators,
                          "Filter: mutation operators")
        ->delimiter(',');
    recommend->add_option("--gates", rec_gates, "Filter: gates")
        ->delimiter(',');
    recommend->add_option("--gate-types", rec_types, "Filter: gate types")
        ->delimiter(',');
    recommend->add_option("--gate-sizes", rec_sizes,
                          "Filter: single and/or multi")
        ->delimiter(',');
    recommend->add_option("--buckets", rec_buckets,
                          "Filter: position buckets (10..100)")
        ->delimiter(',');
    recommend->add_option("--sr", rec_sr, "Target survival-rate band lo:hi");
    recommend->add_option("--max", rec_opts.query.max_results,
                          "Maximum mutants to return")
        ->check(CLI::PositiveNumber);
    recommend->add_option("--manifest", rec_opts.manifest_path,
                          "Manifest output path");
    recommend->add_option("--campaign-dir", rec_opts.campaign_dir,
                          "Campaign directory holding mutants/");
    recommend->add_option("--copy-dir", rec_opts.copy_dir,
                          "Copy selected mutant QASM files here");
    recommend->set_config("--config", "",
                          "Read options from a key=value config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*generate) return cmd_generate(resolve_campaign(generate_flags));
        if (*run) return cmd_run(resolve_campaign(run_flags));
        if (*analyze) {
            for (const std::string& arg : group_args) {
                std::vector<IndependentVariable> grouping;
                std::stringstream ss(arg);
                std::string name;
                while (std::getline(ss, name, ',')) {
                    if (!name.empty()) grouping.push_back(iv_from_name(name));
                }
                analyze_opts.groupings.push_back(std::move(grouping));
            }
            return cmd_analyze(analyze_opts);
        }
        if (*recommend) {
            int scopes = 0;
            if (!rec_algorithm.empty()) {
                rec_opts.query.scope = {ScopeKind::Algorithm, rec_algorithm};
                ++scopes;
            }
            if (!rec_group.empty()) {
                rec_opts.query.scope = {ScopeKind::AlgorithmGroup, rec_group};
                ++scopes;
            }
            if (!rec_dominance.empty()) {
                rec_opts.query.scope = {
                    ScopeKind::OutputDominance,
                    std::string(output_dominance_name(
                        parse_dominance_flag(rec_dominance)))};
                ++scopes;
            }
            if (scopes > 1) {
                throw std::invalid_argument(
                    "use at most one of --algorithm, --algorithm-group, "
                    "--dominance");
            }
            for (const std::string& name : rec_operators) {
                rec_opts.query.operators.push_back(parse_operator(name));
            }
            for (const std::string& name : rec_gates) {
                rec_opts.query.gates.push_back(catalog_entry(name).id);
            }
            for (const std::string& name : rec_types) {
                rec_opts.query.gate_types.push_back(parse_gate_type(name));
            }
            for (const std::string& name : rec_sizes) {
                rec_opts.query.gate_sizes.push_back(parse_gate_size(name));
            }
            rec_opts.query.position_buckets = rec_buckets;
            const std::size_t colon = rec_sr.find(':');
            if (colon == std::string::npos) {
                throw std::invalid_argument("--sr expects lo:hi");
            }
            rec_opts.query.sr_lo = std::stod(rec_sr.substr(0, colon));
            rec_opts.query.sr_hi = std::stod(rec_sr.substr(colon + 1));
            return cmd_recommend(rec_opts);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
