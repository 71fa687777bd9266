#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "dv/cases.hpp"
#include "dv/cli.hpp"

using namespace dv;
using cli::RunConfig;

namespace {

namespace fs = std::filesystem;

// Scratch files live next to the test binary and are overwritten per run.
fs::path scratch_file(const std::string& name, const std::string& content) {
    fs::path p = fs::temp_directory_path() / ("dv_cli_" + name);
    std::ofstream out(p);
    out << content;
    out.close();
    return p;
}

struct RunResult {
    int status;
    std::string out;
    std::string err;
};

RunResult run_cli(RunConfig cfg) {
    std::ostringstream out, err;
    int status = cli::run(cfg, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("rule names map onto depth specifications") {
    CHECK(cli::parse_rule("wl1").spec.id() == "wl1");
    CHECK(cli::parse_rule("wl2").spec.id() == "wl2");
    CHECK(cli::parse_rule("wl3").spec.id() == "wl3");
    CHECK(cli::parse_rule("wlinf").spec.id() == "wlinf");
    CHECK(cli::parse_rule("tukey").spec.id() == "tukey");
    CHECK(cli::parse_rule("liu").spec.id() == "liu");
    CHECK(cli::parse_rule("wlp:2.5").spec.p == 2.5);
    CHECK(cli::parse_rule("wlp:4").spec.id() == "wl4");

    CHECK(cli::parse_rule("mj").spec.id() == "wl1");
    CHECK(cli::parse_rule("rv").spec.id() == "wl2");
    CHECK(cli::parse_rule("approval").spec.id() == "wl2");
    CHECK(cli::parse_rule("approval").requires_binary);
    CHECK_FALSE(cli::parse_rule("rv").requires_binary);

    CHECK_THROWS_AS(cli::parse_rule("borda"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_rule("wlp:"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_rule("wlp:abc"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_rule("wlp:0.5"), std::invalid_argument);

    CHECK(cli::parse_tiebreak("report") == TieBreak::ReportTie);
    CHECK(cli::parse_tiebreak("lowest") == TieBreak::LowestIndex);
    CHECK(cli::parse_tiebreak("label") == TieBreak::LabelOrder);
    CHECK_THROWS_AS(cli::parse_tiebreak("coin-flip"), std::invalid_argument);
}

TEST_CASE("electing from a ballot file emits a full JSON outcome") {
    fs::path ballots = scratch_file("demo.csv", cases::demo_csv());

    RunConfig cfg;
    cfg.command = RunConfig::Command::Elect;
    cfg.input_path = ballots.string();
    cfg.rule = "wl1";
    RunResult r = run_cli(cfg);
    REQUIRE(r.status == 0);
    CHECK(r.err.empty());

    cli::json doc = cli::json::parse(r.out);
    CHECK(doc["rule"] == "wl1");
    CHECK(doc["catalog_name"] == "majority-judgment");
    CHECK(doc["winner"] == "c2");
    CHECK(doc["aggregated_grades"]["c1"] == 0.54);
    CHECK(doc["aggregated_grades"]["c2"] == 0.67);

    cfg.rule = "wl2";
    cli::json mean = cli::json::parse(run_cli(cfg).out);
    CHECK(mean["winner"] == "c1");
    CHECK(mean["catalog_name"] == "range-voting");

    // the alias resolves to the same rule, byte for byte
    cfg.rule = "mj";
    RunResult alias = run_cli(cfg);
    cfg.rule = "wl1";
    CHECK(alias.out == run_cli(cfg).out);
}

TEST_CASE("csv output lists one aggregated grade per candidate") {
    fs::path ballots = scratch_file("demo.csv", cases::demo_csv());

    RunConfig cfg;
    cfg.command = RunConfig::Command::Elect;
    cfg.input_path = ballots.string();
    cfg.rule = "wlinf";
    cfg.output = "csv";
    RunResult r = run_cli(cfg);
    REQUIRE(r.status == 0);

    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "candidate,grade");
    std::getline(lines, line);
    REQUIRE(line.rfind("c1,", 0) == 0);
    CHECK(std::strtod(line.c_str() + 3, nullptr) == doctest::Approx(0.69));
    std::getline(lines, line);
    CHECK(line.rfind("c2,", 0) == 0);
    std::getline(lines, line);
    CHECK(line == "winner,c1");
}

TEST_CASE("approval voting insists on binary ballots") {
    fs::path continuous = scratch_file("demo.csv", cases::demo_csv());
    RunConfig cfg;
    cfg.command = RunConfig::Command::Elect;
    cfg.input_path = continuous.string();
    cfg.rule = "approval";
    RunResult rejected = run_cli(cfg);
    CHECK(rejected.status == 1);
    CHECK_FALSE(rejected.err.empty());

    fs::path binary =
        scratch_file("binary.csv", serialize_ballots(cases::demo_binary()));
    cfg.input_path = binary.string();
    RunResult r = run_cli(cfg);
    REQUIRE(r.status == 0);
    cli::json doc = cli::json::parse(r.out);
    CHECK(doc["catalog_name"] == "approval-voting");
    CHECK(doc["winner"] == "c2");  // ten of fifteen voters approve c2
    CHECK(doc["aggregated_grades"]["c2"] == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("depth grids stream as node-per-row csv") {
    fs::path ballots = scratch_file("demo.csv", cases::demo_csv());
    RunConfig cfg;
    cfg.command = RunConfig::Command::DepthGrid;
    cfg.input_path = ballots.string();
    cfg.rule = "wl1";
    cfg.resolution = 0.02;
    cfg.output = "csv";
    RunResult r = run_cli(cfg);
    REQUIRE(r.status == 0);

    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    std::getline(lines, line);
    CHECK(line == "x1,x2,depth");
    while (std::getline(lines, line))
        if (!line.empty()) ++count;
    CHECK(count == 51 * 51);
}

TEST_CASE("audits report paradox findings and accept a split electorate") {
    GradingMatrix sub = noshow_case_subquadratic(0.1);
    fs::path ballots =
        scratch_file("union.csv", serialize_ballots(sub.without_voter(2)));
    fs::path split = scratch_file(
        "split.csv", serialize_ballots(sub.without_voter(0).without_voter(0)));

    RunConfig cfg;
    cfg.command = RunConfig::Command::Audit;
    cfg.input_path = ballots.string();
    cfg.split_path = split.string();
    cfg.rule = "wlp:1.5";
    RunResult r = run_cli(cfg);
    REQUIRE(r.status == 0);

    cli::json doc = cli::json::parse(r.out);
    CHECK(doc["rule"] == "wl1.5");
    REQUIRE(doc.contains("reinforcement_witness"));
    REQUIRE_FALSE(doc["reinforcement_witness"].is_null());
    CHECK(doc["reinforcement_witness"]["candidate"] == "c2");
    CHECK(doc["reinforcement_witness"]["combined_winner"] == "c1");
}

TEST_CASE("axiom sweeps and the reproduction suite succeed end to end") {
    RunConfig cfg;
    cfg.command = RunConfig::Command::Axioms;
    cfg.rule = "wl2";
    cfg.trials = 60;
    cfg.seed = 11;
    RunResult ax = run_cli(cfg);
    CHECK(ax.status == 0);  // nonzero would mean a failed condition
    cli::json doc = cli::json::parse(ax.out);
    CHECK(doc["trials"] == 60);
    CHECK(doc["conditions"]["neutrality"]["passed"] == 60);
    CHECK(doc["conditions"]["monotonicity"]["failed"] == 0);
    CHECK(doc["counterexamples"].empty());

    RunConfig rep;
    rep.command = RunConfig::Command::Reproduce;
    RunResult rr = run_cli(rep);
    CHECK(rr.status == 0);
    CHECK(rr.out.find("REPRODUCE OK") != std::string::npos);
}

TEST_CASE("bad inputs exit with status one and a diagnostic") {
    RunConfig cfg;
    cfg.command = RunConfig::Command::Elect;
    cfg.input_path = "/nonexistent/ballots.csv";
    RunResult missing = run_cli(cfg);
    CHECK(missing.status == 1);
    CHECK_FALSE(missing.err.empty());

    fs::path ragged = scratch_file("ragged.csv", "voter,c1,c2\nv1,0.5,0.6\nv2,0.7\n");
    cfg.input_path = ragged.string();
    RunResult bad = run_cli(cfg);
    CHECK(bad.status == 1);
    CHECK(bad.err.find("line 3") != std::string::npos);

    fs::path out_of_range =
        scratch_file("range.csv", "voter,c1,c2\nv1,0.5,1.6\n");
    cfg.input_path = out_of_range.string();
    CHECK(run_cli(cfg).status == 1);

    cfg.input_path = scratch_file("demo.csv", cases::demo_csv()).string();
    cfg.rule = "banana";
    CHECK(run_cli(cfg).status == 1);
}
