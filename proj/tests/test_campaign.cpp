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

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmut/campaign.hpp"
#include "qmut/record_io.hpp"

using namespace qmut;
namespace fs = std::filesystem;

namespace {

const char* kBellQasm =
    "OPENQASM 2.0;\n"
    "include \"qelib1.inc\";\n"
    "qreg q[2];\n"
    "creg c[2];\n"
    "h q[0];\n"
    "cx q[0],q[1];\n"
    "measure q[0] -> c[0];\n"
    "measure q[1] -> c[1];\n";

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag)
        : path(fs::temp_directory_path() /
               ("qmut_campaign_" + tag + "_" + std::to_string(::getpid()))) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

CampaignConfig small_campaign(const fs::path& input, const fs::path& out) {
    CampaignConfig cfg;
    cfg.inputs = {input.string()};
    cfg.output_dir = out.string();
    cfg.shots = 20000;
    return cfg;
}

}  // namespace

TEST_CASE("seed policy names round-trip") {
    CHECK(seed_policy_name(SeedPolicy::Shared) == "shared");
    CHECK(seed_policy_name(SeedPolicy::PerMutant) == "per_mutant");
    CHECK(seed_policy_from_name("shared") == SeedPolicy::Shared);
    CHECK(seed_policy_from_name("per_mutant") == SeedPolicy::PerMutant);
    CHECK_THROWS_AS(seed_policy_from_name("random"), std::invalid_argument);
}

TEST_CASE("default program metadata classifies MQT-style names") {
    const ProgramMeta ghz = default_program_meta("ghz_5");
    CHECK(ghz.algorithm == "ghz");
    CHECK(ghz.algorithm_group == "ghz");
    CHECK(ghz.output_dominance == OutputDominance::DiverseOutput);

    const ProgramMeta su2 = default_program_meta("su2random_16");
    CHECK(su2.algorithm == "su2random");
    CHECK(su2.algorithm_group == "vqe");
    CHECK(su2.output_dominance == OutputDominance::OutputDominant);

    CHECK(default_program_meta("wstate_3").output_dominance ==
          OutputDominance::DiverseOutput);
    CHECK(default_program_meta("qftentangled_7").algorithm_group == "qft");
    CHECK(default_program_meta("dj_4").output_dominance ==
          OutputDominance::OutputDominant);

    // Unknown algorithms fall back to their own name and dominant output.
    const ProgramMeta unknown = default_program_meta("myalg_7");
    CHECK(unknown.algorithm == "myalg");
    CHECK(unknown.algorithm_group == "myalg");
    CHECK(unknown.output_dominance == OutputDominance::OutputDominant);

    // Only trailing numeric suffixes are stripped.
    CHECK(default_program_meta("foo").algorithm == "foo");
    CHECK(default_program_meta("foo_bar").algorithm == "foo_bar");
    CHECK(default_program_meta("foo_").algorithm == "foo_");
    CHECK(default_program_meta("grover-noancilla_3").algorithm_group ==
          "grover");
}

TEST_CASE("load_corpus reads the desk corpus with manifest overrides") {
    std::vector<std::string> errors;
    const std::vector<LoadedCircuit> circuits =
        load_corpus({QMUT_CORPUS_DIR}, errors);
    CHECK(errors.empty());
    CHECK(circuits.size() == 29);

    // Directory scans are sorted by filename.
    for (std::size_t i = 1; i < circuits.size(); ++i) {
        CHECK(circuits[i - 1].source.filename().string() <
              circuits[i].source.filename().string());
    }

    std::map<std::string, const LoadedCircuit*> by_name;
    for (const LoadedCircuit& loaded : circuits) {
        by_name[loaded.circuit.name()] = &loaded;
    }
    REQUIRE(by_name.count("ghz_2") == 1);
    CHECK(by_name.at("ghz_2")->circuit.meta().output_dominance ==
          OutputDominance::DiverseOutput);
    REQUIRE(by_name.count("su2random_5") == 1);
    CHECK(by_name.at("su2random_5")->circuit.meta().algorithm_group == "vqe");
    // grover_* and qpe_* get their group from the corpus manifest.
    REQUIRE(by_name.count("grover_2") == 1);
    CHECK(by_name.at("grover_2")->circuit.meta().algorithm_group == "grover");
    CHECK(by_name.at("grover_2")->circuit.meta().output_dominance ==
          OutputDominance::OutputDominant);
    REQUIRE(by_name.count("qpe_4") == 1);
    CHECK(by_name.at("qpe_4")->circuit.meta().algorithm_group == "qpe");
}

TEST_CASE("manifest entries override algorithm, group, and dominance") {
    TempDir tmp("manifest");
    write_file(tmp.path / "bell.qasm", kBellQasm);
    write_file(tmp.path / "manifest.json",
               R"({"circuits": {"bell": {"algorithm": "bellpair",)"
               R"("algorithm_group": "epr", "output_dominance": "diverse"}}})");
    std::vector<std::string> errors;
    const std::vector<LoadedCircuit> circuits =
        load_corpus({tmp.path.string()}, errors);
    CHECK(errors.empty());
    REQUIRE(circuits.size() == 1);
    const ProgramMeta& meta = circuits[0].circuit.meta();
    CHECK(meta.algorithm == "bellpair");
    CHECK(meta.algorithm_group == "epr");
    CHECK(meta.output_dominance == OutputDominance::DiverseOutput);
}

TEST_CASE("load_corpus reports bad inputs and keeps going") {
    TempDir tmp("errors");
    write_file(tmp.path / "good.qasm", kBellQasm);
    write_file(tmp.path / "broken.qasm", "OPENQASM 2.0;\nqreg q[;\n");
    std::vector<std::string> errors;
    const std::vector<LoadedCircuit> circuits =
        load_corpus({tmp.path.string(), "/no/such/path"}, errors);
    REQUIRE(circuits.size() == 1);
    CHECK(circuits[0].circuit.name() == "good");
    REQUIRE(errors.size() == 2);
    CHECK(errors[0].find("/no/such/path") != std::string::npos);
    CHECK(errors[1].find("broken.qasm") != std::string::npos);

    SUBCASE("a malformed manifest is an error, not a crash") {
        write_file(tmp.path / "manifest.json", "{nope");
        std::vector<std::string> manifest_errors;
        const std::vector<LoadedCircuit> again =
            load_corpus({(tmp.path / "good.qasm").string()}, manifest_errors);
        CHECK(again.size() == 1);
        REQUIRE(manifest_errors.size() == 1);
        CHECK(manifest_errors[0].find("manifest.json") != std::string::npos);
    }
}

TEST_CASE("generate writes specs and one QASM file per mutant") {
    TempDir tmp("generate");
    const fs::path input = tmp.path / "in";
    fs::create_directories(input);
    write_file(input / "bell.qasm", kBellQasm);

    const CampaignConfig cfg = small_campaign(input, tmp.path / "out");
    REQUIRE(cmd_generate(cfg) == kExitOk);

    const auto specs = read_spec_store(tmp.path / "out" / "specs.jsonl");
    CHECK(specs.size() == 68);  // 51 Add + 2 Remove + 15 Replace
    std::size_t qasm_files = 0;
    for (const auto& entry :
         fs::directory_iterator(tmp.path / "out" / "mutants")) {
        qasm_files += entry.path().extension() == ".qasm";
    }
    CHECK(qasm_files == specs.size());
    for (const auto& [id, spec] : specs) {
        CHECK(fs::is_regular_file(tmp.path / "out" / "mutants" /
                                  mutant_filename(spec)));
    }

    SUBCASE("empty input set is a usage error") {
        CampaignConfig none = cfg;
        none.inputs = {(tmp.path / "missing").string()};
        CHECK(cmd_generate(none) == kExitUsage);
    }
}

TEST_CASE("run judges every spec and resumes interrupted campaigns") {
    TempDir tmp("run");
    const fs::path input = tmp.path / "in";
    fs::create_directories(input);
    write_file(input / "bell.qasm", kBellQasm);
    write_file(input / "manifest.json",
               R"({"circuits": {"bell": {"output_dominance": "diverse"}}})");

    const CampaignConfig cfg = small_campaign(input, tmp.path / "out");
    REQUIRE(cmd_generate(cfg) == kExitOk);
    REQUIRE(cmd_run(cfg) == kExitOk);

    const fs::path record_path = tmp.path / "out" / "records.jsonl";
    const std::vector<MutantRecord> records = read_record_store(record_path);
    const auto specs = read_spec_store(tmp.path / "out" / "specs.jsonl");
    REQUIRE(records.size() == specs.size());

    std::set<std::string> spec_ids;
    for (const auto& [id, spec] : specs) spec_ids.insert(id);
    for (const MutantRecord& record : records) {
        CHECK(spec_ids.count(record.id) == 1);
        CHECK(record.algorithm == "bell");
        CHECK(record.output_dominance == OutputDominance::DiverseOutput);
        CHECK(record.origin_metrics.num_gates == 2);
        if (record.verdict.kind == VerdictKind::KilledOPO) {
            CHECK(record.verdict.p_value.has_value());
        }
        CHECK(record.verdict.kind != VerdictKind::Stillborn);
    }
    const std::string first_bytes = read_file(record_path);

    SUBCASE("a second run keeps every record byte-identical") {
        REQUIRE(cmd_run(cfg) == kExitOk);
        CHECK(read_file(record_path) == first_bytes);
    }
    SUBCASE("a truncated store is topped up, not recomputed") {
        std::vector<MutantRecord> half(records.begin(),
                                       records.begin() + 30);
        write_record_store(record_path, half);
        REQUIRE(cmd_run(cfg) == kExitOk);
        CHECK(read_file(record_path) == first_bytes);
    }
    SUBCASE("worker count does not change the results") {
        CampaignConfig threaded = cfg;
        threaded.output_dir = (tmp.path / "out_mt").string();
        threaded.threads = 3;
        REQUIRE(cmd_generate(threaded) == kExitOk);
        REQUIRE(cmd_run(threaded) == kExitOk);
        CHECK(read_file(tmp.path / "out_mt" / "records.jsonl") == first_bytes);
    }
    SUBCASE("per-mutant seeds change observations but not the schema") {
        CampaignConfig per = cfg;
        per.output_dir = (tmp.path / "out_per").string();
        per.seed_policy = SeedPolicy::PerMutant;
        REQUIRE(cmd_generate(per) == kExitOk);
        REQUIRE(cmd_run(per) == kExitOk);
        const auto per_records =
            read_record_store(tmp.path / "out_per" / "records.jsonl");
        CHECK(per_records.size() == records.size());
    }
}

TEST_CASE("run without generate is a usage error") {
    TempDir tmp("norun");
    CampaignConfig cfg = small_campaign(tmp.path / "in", tmp.path / "out");
    CHECK(cmd_run(cfg) == kExitUsage);
}

TEST_CASE("analyze writes the requested reports") {
    TempDir tmp("analyze");
    const fs::path input = tmp.path / "in";
    fs::create_directories(input);
    write_file(input / "bell.qasm", kBellQasm);
    const CampaignConfig cfg = small_campaign(input, tmp.path / "out");
    REQUIRE(cmd_generate(cfg) == kExitOk);
    REQUIRE(cmd_run(cfg) == kExitOk);

    AnalyzeOptions opts;
    opts.store = (tmp.path / "out" / "records.jsonl").string();
    opts.output_dir = (tmp.path / "reports").string();
    opts.groupings = {{IndependentVariable::Operator},
                      {IndependentVariable::Operator,
                       IndependentVariable::GateSize}};
    opts.top_k = 5;
    opts.heatmaps = true;
    REQUIRE(cmd_analyze(opts) == kExitOk);

    const fs::path reports(opts.output_dir);
    CHECK(fs::is_regular_file(reports / "sr_operator.csv"));
    CHECK(fs::is_regular_file(reports / "sr_operator_gate_size.csv"));
    CHECK(fs::is_regular_file(reports / "top_operator.csv"));
    CHECK(fs::is_regular_file(reports / "heatmap_operator_gate_size.json"));

    const std::vector<MutantRecord> records = read_record_store(opts.store);
    CHECK(read_file(reports / "sr_operator.csv") ==
          survival_table_csv(
              survival_rate(records, {IndependentVariable::Operator})));

    SUBCASE("single-origin correlations degrade to a warning") {
        AnalyzeOptions corr = opts;
        corr.groupings = {{IndependentVariable::Operator}};
        corr.correlations = true;
        CHECK(cmd_analyze(corr) == kExitPartial);
    }
    SUBCASE("an oversized grouping is rejected") {
        AnalyzeOptions bad = opts;
        bad.groupings = {{IndependentVariable::Operator,
                          IndependentVariable::Gate,
                          IndependentVariable::GateSize,
                          IndependentVariable::PositionBucket}};
        CHECK(cmd_analyze(bad) == kExitUsage);
    }
    SUBCASE("a missing store is rejected") {
        AnalyzeOptions missing = opts;
        missing.store = (tmp.path / "nothing.jsonl").string();
        CHECK(cmd_analyze(missing) == kExitUsage);
    }
}

TEST_CASE("recommend writes a manifest and optional mutant copies") {
    TempDir tmp("recommend");
    const fs::path input = tmp.path / "in";
    fs::create_directories(input);
    write_file(input / "bell.qasm", kBellQasm);
    const CampaignConfig cfg = small_campaign(input, tmp.path / "out");
    REQUIRE(cmd_generate(cfg) == kExitOk);
    REQUIRE(cmd_run(cfg) == kExitOk);

    RecommendOptions opts;
    opts.store = (tmp.path / "out" / "records.jsonl").string();
    opts.manifest_path = (tmp.path / "recommendation.json").string();
    opts.campaign_dir = (tmp.path / "out").string();
    opts.copy_dir = (tmp.path / "picked").string();
    opts.query.sr_lo = 0.0;
    opts.query.sr_hi = 1.0;
    opts.query.max_results = 5;
    REQUIRE(cmd_recommend(opts) == kExitOk);

    const auto doc = nlohmann::json::parse(read_file(opts.manifest_path));
    CHECK(doc["scope"] == "all");
    CHECK(doc["max_results"] == 5);
    REQUIRE(doc["mutants"].is_array());
    CHECK(doc["mutants"].size() <= 5);
    CHECK_FALSE(doc["mutants"].empty());

    const std::vector<MutantRecord> records = read_record_store(opts.store);
    const Recommendation want = recommend(records, opts.query);
    REQUIRE(doc["mutants"].size() == want.records.size());
    for (std::size_t i = 0; i < want.records.size(); ++i) {
        CHECK(doc["mutants"][i]["id"] == want.records[i].id);
        const fs::path file(doc["mutants"][i]["file"].get<std::string>());
        CHECK(fs::is_regular_file(file));
        CHECK(fs::is_regular_file(fs::path(opts.copy_dir) / file.filename()));
    }
    CHECK(doc["set_survival_rate"] == want.set_survival_rate);

    SUBCASE("a missing store is rejected") {
        RecommendOptions missing = opts;
        missing.store = (tmp.path / "nothing.jsonl").string();
        CHECK(cmd_recommend(missing) == kExitUsage);
    }
}
