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

#include "qmut/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qmut/metrics.hpp"
#include "qmut/qasm.hpp"
#include "qmut/record_io.hpp"

namespace qmut {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

struct AlgorithmDefaults {
    std::string_view group;
    OutputDominance dominance;
};

/// The 28 MQT Bench algorithms with their 12-group classification.  Diverse
/// output is assigned where the full distribution carries the result (state
/// preparation, Fourier spectra, walks, generative sampling).
const std::map<std::string, AlgorithmDefaults, std::less<>>& mqt_defaults() {
    static const std::map<std::string, AlgorithmDefaults, std::less<>> table = {
        {"ae", {"ae", OutputDominance::OutputDominant}},
        {"dj", {"dj", OutputDominance::OutputDominant}},
        {"ghz", {"ghz", OutputDominance::DiverseOutput}},
        {"graphstate", {"graphstate", OutputDominance::DiverseOutput}},
        {"groundstatelarge", {"vqe", OutputDominance::OutputDominant}},
        {"groundstatemedium", {"vqe", OutputDominance::OutputDominant}},
        {"groundstatesmall", {"vqe", OutputDominance::OutputDominant}},
        {"grover-noancilla", {"grover", OutputDominance::OutputDominant}},
        {"grover-v-chain", {"grover", OutputDominance::OutputDominant}},
        {"portfolioqaoa", {"qaoa", OutputDominance::OutputDominant}},
        {"portfoliovqe", {"vqe", OutputDominance::OutputDominant}},
        {"pricingcall", {"ae", OutputDominance::OutputDominant}},
        {"pricingput", {"ae", OutputDominance::OutputDominant}},
        {"qaoa", {"qaoa", OutputDominance::OutputDominant}},
        {"qft", {"qft", OutputDominance::DiverseOutput}},
        {"qftentangled", {"qft", OutputDominance::DiverseOutput}},
        {"qgan", {"qgan", OutputDominance::DiverseOutput}},
        {"qpeexact", {"qpe", OutputDominance::OutputDominant}},
        {"qpeinexact", {"qpe", OutputDominance::OutputDominant}},
        {"qwalk-noancilla", {"qwalk", OutputDominance::DiverseOutput}},
        {"qwalk-v-chain", {"qwalk", OutputDominance::DiverseOutput}},
        {"realamprandom", {"vqe", OutputDominance::OutputDominant}},
        {"routing", {"vqe", OutputDominance::OutputDominant}},
        {"su2random", {"vqe", OutputDominance::OutputDominant}},
        {"tsp", {"vqe", OutputDominance::OutputDominant}},
        {"twolocalrandom", {"vqe", OutputDominance::OutputDominant}},
        {"vqe", {"vqe", OutputDominance::OutputDominant}},
        {"wstate", {"wstate", OutputDominance::DiverseOutput}},
    };
    return table;
}

/// "<algorithm>_<n>" -> "<algorithm>"; names without a numeric suffix pass
/// through unchanged.
std::string algorithm_token(const std::string& circuit_name) {
    const std::size_t underscore = circuit_name.rfind('_');
    if (underscore == std::string::npos || underscore + 1 == circuit_name.size()) {
        return circuit_name;
    }
    const std::string suffix = circuit_name.substr(underscore + 1);
    if (std::all_of(suffix.begin(), suffix.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
        return circuit_name.substr(0, underscore);
    }
    return circuit_name;
}

OutputDominance parse_dominance(const std::string& value) {
    if (value == "dominant" || value == "OutputDominant") {
        return OutputDominance::OutputDominant;
    }
    if (value == "diverse" || value == "DiverseOutput") {
        return OutputDominance::DiverseOutput;
    }
    throw std::invalid_argument("unknown output dominance '" + value + "'");
}

/// Loads the manifest.json of `dir` once; absent manifests yield an empty
/// map.  Malformed manifests are reported as errors for every circuit that
/// would need them.
class ManifestCache {
public:
    const std::map<std::string, json>* lookup(const fs::path& dir,
                                              std::vector<std::string>& errors) {
        const std::string key = dir.string();
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            it = cache_.emplace(key, load(dir, errors)).first;
        }
        return &it->second;
    }

private:
    std::map<std::string, json> load(const fs::path& dir,
                                     std::vector<std::string>& errors) {
        std::map<std::string, json> entries;
        const fs::path path = dir / "manifest.json";
        std::ifstream in(path);
        if (!in) return entries;
        try {
            const json doc = json::parse(in);
            if (doc.contains("circuits")) {
                for (const auto& [name, entry] : doc.at("circuits").items()) {
                    entries[name] = entry;
                }
            }
        } catch (const std::exception& e) {
            errors.push_back(path.string() + ": " + e.what());
        }
        return entries;
    }

    std::map<std::string, std::map<std::string, json>> cache_;
};

void apply_manifest_entry(ProgramMeta& meta, const json& entry) {
    if (entry.contains("algorithm")) {
        meta.algorithm = entry.at("algorithm").get<std::string>();
    }
    if (entry.contains("algorithm_group")) {
        meta.algorithm_group = entry.at("algorithm_group").get<std::string>();
    }
    if (entry.contains("output_dominance")) {
        meta.output_dominance =
            parse_dominance(entry.at("output_dominance").get<std::string>());
    }
}

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs,
                                    std::vector<std::string>& errors) {
    std::vector<fs::path> files;
    for (const std::string& input : inputs) {
        const fs::path path(input);
        if (fs::is_directory(path)) {
            std::vector<fs::path> found;
            for (const auto& entry : fs::directory_iterator(path)) {
                if (entry.is_regular_file() &&
                    entry.path().extension() == ".qasm") {
                    found.push_back(entry.path());
                }
            }
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else if (fs::is_regular_file(path)) {
            files.push_back(path);
        } else {
            errors.push_back(input + ": no such file or directory");
        }
    }
    return files;
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const char c : text) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::uint64_t mutant_seed(const CampaignConfig& cfg, const std::string& id) {
    if (cfg.seed_policy == SeedPolicy::Shared) return cfg.seed;
    return cfg.seed ^ std::stoull(id, nullptr, 16);
}

/// Runs `work(i)` for i in [0, n) on cfg.threads workers.  Each index is
/// claimed once, so outputs are slot-addressed and scheduling-independent.
void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t)>& work) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) work(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const std::size_t workers = std::min(threads, n);
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&next, n, &work] {
            for (std::size_t i = next.fetch_add(1); i < n;
                 i = next.fetch_add(1)) {
                work(i);
            }
        });
    }
    for (std::thread& t : pool) t.join();
}

std::string grouping_suffix(const std::vector<IndependentVariable>& grouping) {
    std::string suffix;
    for (const IndependentVariable iv : grouping) {
        if (!suffix.empty()) suffix += "_";
        suffix += iv_name(iv);
    }
    return suffix;
}

void write_text_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
}

}  // namespace

std::string_view seed_policy_name(SeedPolicy policy) {
    return policy == SeedPolicy::Shared ? "shared" : "per_mutant";
}

SeedPolicy seed_policy_from_name(std::string_view name) {
    if (name == "shared") return SeedPolicy::Shared;
    if (name == "per_mutant") return SeedPolicy::PerMutant;
    throw std::invalid_argument("unknown seed policy '" + std::string(name) +
                                "'");
}

ProgramMeta default_program_meta(const std::string& circuit_name) {
    const std::string algorithm = algorithm_token(circuit_name);
    ProgramMeta meta;
    meta.algorithm = algorithm;
    const auto& table = mqt_defaults();
    const auto it = table.find(algorithm);
    if (it != table.end()) {
        meta.algorithm_group = std::string(it->second.group);
        meta.output_dominance = it->second.dominance;
    } else {
        meta.algorithm_group = algorithm;
        meta.output_dominance = OutputDominance::OutputDominant;
    }
    return meta;
}

std::vector<LoadedCircuit> load_corpus(const std::vector<std::string>& inputs,
                                       std::vector<std::string>& errors) {
    std::vector<LoadedCircuit> circuits;
    ManifestCache manifests;
    for (const fs::path& file : expand_inputs(inputs, errors)) {
        std::ifstream in(file);
        if (!in) {
            errors.push_back(file.string() + ": cannot open");
            continue;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        const std::string name = file.stem().string();
        try {
            Circuit circuit = parse_qasm(buffer.str(), name);
            ProgramMeta meta = default_program_meta(name);
            const auto* manifest =
                manifests.lookup(file.parent_path(), errors);
            const auto entry = manifest->find(name);
            if (entry != manifest->end()) {
                apply_manifest_entry(meta, entry->second);
            }
            circuit.set_meta(std::move(meta));
            circuits.push_back({std::move(circuit), file});
        } catch (const std::exception& e) {
            errors.push_back(file.string() + ": " + e.what());
        }
    }
    return circuits;
}

int cmd_generate(const CampaignConfig& cfg) {
    std::vector<std::string> errors;
    const std::vector<LoadedCircuit> circuits = load_corpus(cfg.inputs, errors);
    for (const std::string& error : errors) {
        std::cerr << "error: " << error << "\n";
    }
    if (circuits.empty()) {
        std::cerr << "error: no circuits to mutate\n";
        return kExitUsage;
    }

    const fs::path out_dir(cfg.output_dir);
    const fs::path mutant_dir = out_dir / "mutants";
    fs::create_directories(mutant_dir);

    std::vector<std::pair<std::string, MutantSpec>> specs;
    std::map<std::string, std::size_t> op_counts;
    for (const LoadedCircuit& loaded : circuits) {
        for (MutantSpec& spec : enumerate_mutants(loaded.circuit,
                                                  cfg.enumeration)) {
            const std::string id = mutant_record_id(spec);
            const Circuit mutant = apply_mutation(loaded.circuit, spec);
            write_text_file(mutant_dir / mutant_filename(spec),
                            serialize_qasm(mutant));
            ++op_counts[std::string(mutation_operator_name(spec.op))];
            specs.emplace_back(id, std::move(spec));
        }
    }
    write_spec_store(out_dir / "specs.jsonl", std::move(specs));

    std::cout << "generated";
    for (const std::string_view op : {"Add", "Remove", "Replace"}) {
        std::cout << " " << op << "=" << op_counts[std::string(op)];
    }
    std::cout << " circuits=" << circuits.size() << "\n";
    return errors.empty() ? kExitOk : kExitPartial;
}

int cmd_run(const CampaignConfig& cfg) {
    const fs::path out_dir(cfg.output_dir);
    const fs::path spec_path = out_dir / "specs.jsonl";
    std::vector<std::pair<std::string, MutantSpec>> specs;
    try {
        specs = read_spec_store(spec_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (specs.empty()) {
        std::cerr << "error: no specs in '" << spec_path.string()
                  << "' (run generate first)\n";
        return kExitUsage;
    }

    std::vector<std::string> errors;
    const std::vector<LoadedCircuit> circuits = load_corpus(cfg.inputs, errors);
    for (const std::string& error : errors) {
        std::cerr << "error: " << error << "\n";
    }
    std::map<std::string, const LoadedCircuit*> by_name;
    for (const LoadedCircuit& loaded : circuits) {
        by_name[loaded.circuit.name()] = &loaded;
    }

    const fs::path record_path = out_dir / "records.jsonl";
    std::vector<MutantRecord> records = read_record_store(record_path);
    std::set<std::string> done;
    for (const MutantRecord& record : records) done.insert(record.id);

    // Per-origin expected counts and metrics, computed once.
    struct OriginContext {
        const LoadedCircuit* loaded = nullptr;
        Counts expected;
        CircuitMetrics metrics;
        std::string failure;  // non-empty: all mutants stillborn
    };
    std::map<std::string, OriginContext> origins;
    bool missing_origin = false;
    for (const auto& [id, spec] : specs) {
        if (origins.count(spec.origin) != 0) continue;
        OriginContext ctx;
        const auto it = by_name.find(spec.origin);
        if (it == by_name.end()) {
            ctx.failure = "origin circuit '" + spec.origin + "' not found";
            missing_origin = true;
        } else {
            ctx.loaded = it->second;
            try {
                ctx.expected = sample_shots(it->second->circuit, cfg.shots,
                                            cfg.seed, cfg.qubit_cap);
                ctx.metrics =
                    compute_metrics(it->second->circuit, cfg.qubit_cap);
            } catch (const std::exception& e) {
                ctx.failure = "origin execution failed: " + std::string(e.what());
            }
        }
        origins.emplace(spec.origin, std::move(ctx));
    }

    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (done.count(specs[i].first) == 0) todo.push_back(i);
    }
    std::vector<MutantRecord> fresh(todo.size());
    parallel_for(todo.size(), cfg.threads, [&](std::size_t slot) {
        const auto& [id, spec] = specs[todo[slot]];
        const OriginContext& ctx = origins.at(spec.origin);
        MutantRecord record;
        record.id = id;
        record.spec = spec;
        if (ctx.loaded != nullptr) {
            const ProgramMeta& meta = ctx.loaded->circuit.meta();
            record.algorithm = meta.algorithm;
            record.algorithm_group = meta.algorithm_group;
            record.output_dominance = meta.output_dominance;
            record.origin_metrics = ctx.metrics;
        }
        if (!ctx.failure.empty()) {
            record.verdict.kind = VerdictKind::Stillborn;
            record.stillborn_reason = ctx.failure;
        } else {
            try {
                const Circuit mutant =
                    apply_mutation(ctx.loaded->circuit, spec);
                const Counts observed = sample_shots(
                    mutant, cfg.shots, mutant_seed(cfg, id), cfg.qubit_cap);
                record.verdict = judge(ctx.expected, observed,
                                       ctx.loaded->circuit.meta(), cfg.oracle);
            } catch (const std::exception& e) {
                record.verdict = Verdict{VerdictKind::Stillborn, std::nullopt};
                record.stillborn_reason = e.what();
            }
        }
        fresh[slot] = std::move(record);
    });

    records.insert(records.end(), std::make_move_iterator(fresh.begin()),
                   std::make_move_iterator(fresh.end()));
    write_record_store(record_path, std::move(records));

    std::map<std::string, std::size_t> verdict_counts;
    for (const MutantRecord& record : read_record_store(record_path)) {
        ++verdict_counts[std::string(verdict_kind_name(record.verdict.kind))];
    }
    std::cout << "judged";
    for (const std::string_view kind :
         {"Survived", "KilledWOO", "KilledOPO", "Stillborn"}) {
        std::cout << " " << kind << "="
                  << verdict_counts[std::string(kind)];
    }
    std::cout << " resumed=" << done.size() << "\n";
    return (errors.empty() && !missing_origin) ? kExitOk : kExitPartial;
}

int cmd_analyze(const AnalyzeOptions& opts) {
    std::vector<MutantRecord> records;
    try {
        records = read_record_store(opts.store);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (records.empty()) {
        std::cerr << "error: record store '" << opts.store
                  << "' is missing or empty\n";
        return kExitUsage;
    }
    const fs::path out_dir(opts.output_dir);
    bool partial = false;
    for (const auto& grouping : opts.groupings) {
        if (grouping.empty() || grouping.size() > 3) {
            std::cerr << "error: groupings must use 1-3 variables\n";
            return kExitUsage;
        }
        const std::string suffix = grouping_suffix(grouping);
        const SurvivalTable table = survival_rate(records, grouping);
        write_text_file(out_dir / ("sr_" + suffix + ".csv"),
                        survival_table_csv(table));
        if (opts.top_k > 0) {
            write_text_file(
                out_dir / ("top_" + suffix + ".csv"),
                ranked_csv(table, rank_interactions(table, opts.top_k)));
        }
        if (opts.heatmaps && grouping.size() == 2) {
            write_text_file(out_dir / ("heatmap_" + suffix + ".json"),
                            heatmap_json(table));
        }
    }
    if (opts.correlations) {
        try {
            write_text_file(out_dir / "correlations.csv",
                            correlations_csv(complexity_correlations(records)));
        } catch (const std::exception& e) {
            std::cerr << "warning: correlations skipped: " << e.what() << "\n";
            partial = true;
        }
    }
    std::cout << "analyzed records=" << records.size()
              << " reports=" << opts.output_dir << "\n";
    return partial ? kExitPartial : kExitOk;
}

int cmd_recommend(const RecommendOptions& opts) {
    std::vector<MutantRecord> records;
    try {
        records = read_record_store(opts.store);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (records.empty()) {
        std::cerr << "error: record store '" << opts.store
                  << "' is missing or empty\n";
        return kExitUsage;
    }
    const Recommendation result = recommend(records, opts.query);
    if (result.records.empty()) {
        std::cerr << "warning: no mutants match the requested band\n";
    }

    ordered_json manifest;
    switch (opts.query.scope.kind) {
        case ScopeKind::All: manifest["scope"] = "all"; break;
        case ScopeKind::Algorithm:
            manifest["scope"] = "algorithm=" + opts.query.scope.value;
            break;
        case ScopeKind::AlgorithmGroup:
            manifest["scope"] = "algorithm_group=" + opts.query.scope.value;
            break;
        case ScopeKind::OutputDominance:
            manifest["scope"] = "output_dominance=" + opts.query.scope.value;
            break;
    }
    manifest["target_sr"] = {opts.query.sr_lo, opts.query.sr_hi};
    manifest["max_results"] = opts.query.max_results;
    if (std::isnan(result.set_survival_rate)) {
        manifest["set_survival_rate"] = nullptr;
    } else {
        manifest["set_survival_rate"] = result.set_survival_rate;
    }
    ordered_json mutants = ordered_json::array();
    const fs::path mutant_dir =
        opts.campaign_dir.empty() ? fs::path("mutants")
                                  : fs::path(opts.campaign_dir) / "mutants";
    for (const MutantRecord& record : result.records) {
        ordered_json entry;
        entry["id"] = record.id;
        entry["file"] = (mutant_dir / mutant_filename(record.spec)).string();
        entry["origin"] = record.spec.origin;
        entry["operator"] = mutation_operator_name(record.spec.op);
        entry["gate"] = gate_name(record.spec.gate);
        entry["position"] = record.spec.position;
        entry["verdict"] = verdict_kind_name(record.verdict.kind);
        mutants.push_back(std::move(entry));
    }
    manifest["mutants"] = std::move(mutants);
    write_text_file(opts.manifest_path, manifest.dump(2) + "\n");

    bool partial = false;
    if (!opts.copy_dir.empty()) {
        fs::create_directories(opts.copy_dir);
        for (const MutantRecord& record : result.records) {
            const fs::path source = mutant_dir / mutant_filename(record.spec);
            if (!fs::is_regular_file(source)) {
                std::cerr << "warning: missing mutant file '" << source.string()
                          << "'\n";
                partial = true;
                continue;
            }
            fs::copy_file(source,
                          fs::path(opts.copy_dir) / source.filename(),
                          fs::copy_options::overwrite_existing);
        }
    }
    std::cout << "recommended " << result.records.size() << " mutants -> "
              << opts.manifest_path << "\n";
    return partial ? kExitPartial : kExitOk;
}

}  // namespace qmut
