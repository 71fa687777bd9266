#include "dv/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "dv/cases.hpp"
#include "dv/geometry.hpp"

namespace dv::cli {

RuleChoice parse_rule(const std::string& rule) {
    if (rule == "wl1") return {DepthSpec::wlp(1.0), rule, false};
    if (rule == "wl2") return {DepthSpec::wlp(2.0), rule, false};
    if (rule == "wl3") return {DepthSpec::wlp(3.0), rule, false};
    if (rule == "wlinf") return {DepthSpec::wlinf(), rule, false};
    if (rule == "tukey") return {DepthSpec::tukey(), rule, false};
    if (rule == "liu") return {DepthSpec::liu(), rule, false};
    if (rule == "mj") return {DepthSpec::wlp(1.0), rule, false};
    if (rule == "rv") return {DepthSpec::wlp(2.0), rule, false};
    if (rule == "approval") return {DepthSpec::wlp(2.0), rule, true};
    if (rule.rfind("wlp:", 0) == 0) {
        const std::string arg = rule.substr(4);
        char* end = nullptr;
        double p = std::strtod(arg.c_str(), &end);
        if (arg.empty() || end != arg.c_str() + arg.size())
            throw std::invalid_argument("bad exponent in rule '" + rule + "'");
        return {DepthSpec::wlp(p), rule, false};
    }
    throw std::invalid_argument("unknown rule '" + rule + "'");
}

TieBreak parse_tiebreak(const std::string& name) {
    if (name == "report") return TieBreak::ReportTie;
    if (name == "lowest") return TieBreak::LowestIndex;
    if (name == "label") return TieBreak::LabelOrder;
    throw std::invalid_argument("unknown tie-break policy '" + name + "'");
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* method_name(DeepestResult::Method m) {
    switch (m) {
        case DeepestResult::Method::ClosedForm: return "closed_form";
        case DeepestResult::Method::ScalarOptimizer: return "scalar_optimizer";
        case DeepestResult::Method::GridSearch: return "grid_search";
    }
    return "?";
}

json deepest_json(const DeepestResult& r) {
    json set;
    switch (r.set_kind) {
        case DeepestResult::SetKind::SinglePoint:
            set = {{"kind", "single_point"}};
            break;
        case DeepestResult::SetKind::IntervalBox:
            set = {{"kind", "interval_box"}, {"lower", r.box_lower}, {"upper", r.box_upper}};
            break;
        case DeepestResult::SetKind::GridRegion:
            set = {{"kind", "grid_region"}, {"nodes", r.region.size()}};
            break;
    }
    json out;
    out["canonical_point"] = r.canonical;
    out["set"] = set;
    out["depth"] = r.depth;
    out["method"] = method_name(r.method);
    out["residual"] = r.residual;
    out["approximate"] = r.approximate;
    return out;
}

}  // namespace

json outcome_json(const ElectionOutcome& o, const GradingMatrix& m) {
    json out;
    out["rule"] = o.rule_name;
    if (!o.catalog_name.empty()) out["catalog_name"] = o.catalog_name;
    out["tiebreak"] = to_string(o.tiebreak);
    out["winner"] = o.winner ? json(m.candidate_labels()[*o.winner]) : json(nullptr);
    json winners = json::array();
    for (std::size_t i : o.winner_set) winners.push_back(m.candidate_labels()[i]);
    out["winner_set"] = winners;
    json grades;
    for (std::size_t i = 0; i < o.aggregated.size(); ++i)
        grades[m.candidate_labels()[i]] = o.aggregated[i];
    out["aggregated_grades"] = grades;
    out["deepest"] = deepest_json(o.deepest);
    return out;
}

json audit_json(const AuditReport& r, const GradingMatrix& m) {
    auto label = [&m](const std::optional<std::size_t>& i) {
        return i ? json(m.candidate_labels()[*i]) : json(nullptr);
    };
    json out;
    out["rule"] = r.rule_name;
    out["outcome"] = outcome_json(r.condorcet.outcome, m);
    out["pairwise_winner"] = label(r.condorcet.winner);
    out["pairwise_loser"] = label(r.condorcet.loser);
    out["condorcet_winner_paradox"] = r.condorcet.winner_paradox;
    out["condorcet_loser_paradox"] = r.condorcet.loser_paradox;
    json witnesses = json::array();
    for (const NoShowWitness& w : r.noshow)
        witnesses.push_back({{"voter", m.voter_labels()[w.voter]},
                             {"winner_with", m.candidate_labels()[w.winner_with]},
                             {"winner_without", m.candidate_labels()[w.winner_without]}});
    out["noshow_witnesses"] = witnesses;
    if (r.reinforcement_checked) {
        if (r.reinforcement) {
            json w;
            w["candidate"] = m.candidate_labels()[r.reinforcement->candidate];
            w["combined_winner"] = label(r.reinforcement->combined_winner);
            out["reinforcement_witness"] = w;
        } else {
            out["reinforcement_witness"] = nullptr;
        }
    }
    return out;
}

json axiom_json(const AxiomReport& r) {
    auto tally = [](const ConditionTally& t) {
        return json{{"passed", t.passed}, {"failed", t.failed}};
    };
    json out;
    out["rule"] = r.rule_name;
    out["trials"] = r.trials;
    out["seed"] = r.seed;
    out["conditions"] = {{"neutrality", tally(r.neutrality)},
                         {"anonymity", tally(r.anonymity)},
                         {"unanimity", tally(r.unanimity)},
                         {"monotonicity", tally(r.monotonicity)},
                         {"iia", tally(r.iia)}};
    out["strict_monotonicity"] = {{"strict", r.strict_increases}, {"plateau", r.plateaus}};
    out["counterexamples"] = r.counterexamples;
    return out;
}

namespace {

GradingMatrix load_ballots(const RunConfig& cfg, const std::string& path,
                           const RuleChoice& rule) {
    GradingMatrix m = parse_ballots(read_file(path));
    if (rule.requires_binary) {
        for (std::size_t i = 0; i < m.candidates(); ++i)
            for (std::size_t j = 0; j < m.voters(); ++j)
                if (m(i, j) != 0.0 && m(i, j) != 1.0)
                    throw std::invalid_argument(
                        "rule '" + rule.alias + "' needs 0/1 ballots; found " +
                        std::to_string(m(i, j)));
        m.set_scale(GradeScale::binary());
    }
    return m;
}

DepthSpec configure(const RuleChoice& rule, const RunConfig& cfg) {
    DepthSpec spec = rule.spec;
    bool grid_rule = spec.kind == DepthSpec::Kind::TukeyHalfspace ||
                     spec.kind == DepthSpec::Kind::LiuSimplicial;
    if (grid_rule) spec.with_grid_resolution(cfg.resolution);
    return spec;
}

int cmd_elect(const RunConfig& cfg, std::ostream& out) {
    RuleChoice rule = parse_rule(cfg.rule);
    GradingMatrix m = load_ballots(cfg, cfg.input_path, rule);
    ElectionOutcome o = elect(m, configure(rule, cfg), parse_tiebreak(cfg.tiebreak));
    if (cfg.output == "csv") {
        char buf[96];
        out << "candidate,grade\n";
        for (std::size_t i = 0; i < o.aggregated.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", o.aggregated[i]);
            out << m.candidate_labels()[i] << ',' << buf << '\n';
        }
        out << "winner," << (o.winner ? m.candidate_labels()[*o.winner] : "tie") << '\n';
    } else {
        out << outcome_json(o, m).dump(2) << '\n';
    }
    return 0;
}

int cmd_depth_grid(const RunConfig& cfg, std::ostream& out) {
    RuleChoice rule = parse_rule(cfg.rule);
    GradingMatrix m = load_ballots(cfg, cfg.input_path, rule);
    DepthGrid g = depth_grid(m, rule.spec, cfg.resolution);
    if (cfg.output == "json") {
        json doc;
        doc["rule"] = rule.spec.id();
        doc["resolution"] = g.resolution;
        doc["nodes"] = g.nodes;
        doc["values"] = g.values;
        out << doc.dump(2) << '\n';
    } else {
        out << to_csv(g);
    }
    return 0;
}

int cmd_audit(const RunConfig& cfg, std::ostream& out) {
    RuleChoice rule = parse_rule(cfg.rule);
    GradingMatrix m = load_ballots(cfg, cfg.input_path, rule);
    GradingMatrix split;
    bool have_split = !cfg.split_path.empty();
    if (have_split) {
        split = parse_ballots(read_file(cfg.split_path));
        split.set_candidate_labels(m.candidate_labels());  // align on order
    }
    AuditReport r = run_audit(m, configure(rule, cfg), parse_tiebreak(cfg.tiebreak),
                              have_split ? &split : nullptr);
    out << audit_json(r, m).dump(2) << '\n';
    return 0;
}

int cmd_axioms(const RunConfig& cfg, std::ostream& out) {
    RuleChoice rule = parse_rule(cfg.rule);
    AxiomReport r = check_axioms(rule.spec, cfg.trials, cfg.seed);
    out << axiom_json(r).dump(2) << '\n';
    return r.all_passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// reproduce: recompute the bundled election and counterexample results and
// compare them with the expected values recorded here.
// ---------------------------------------------------------------------------

struct Reproducer {
    std::ostream& out;
    bool all_ok = true;

    void check(const std::string& name, bool ok, const std::string& detail) {
        all_ok = all_ok && ok;
        out << (ok ? "ok   " : "FAIL ") << name;
        if (!detail.empty()) out << "  " << detail;
        out << '\n';
    }

    void check_point(const std::string& name, const Profile& got, double e1, double e2,
                     double tol) {
        char buf[160];
        bool ok = std::fabs(got[0] - e1) <= tol && std::fabs(got[1] - e2) <= tol;
        std::snprintf(buf, sizeof buf, "got (%.4f, %.4f) expected (%.4g, %.4g) tol %g",
                      got[0], got[1], e1, e2, tol);
        check(name, ok, buf);
    }
};

int cmd_reproduce(const RunConfig& cfg, std::ostream& out) {
    Reproducer rep{out};
    GradingMatrix m = cases::demo_continuous();

    // Deepest points and winners of the bundled election, one row per rule.
    struct Row {
        const char* rule;
        double e1, e2, tol;
        const char* winner;
    };
    const Row rows[] = {
        {"wl1", 0.54, 0.67, 0.005, "c2"},
        {"wl2", 0.64, 0.53, 0.005, "c1"},
        {"wl3", 0.67, 0.48, 0.005, "c1"},
        {"wlp:4", 0.68, 0.47, 0.005, "c1"},
        {"wlinf", 0.69, 0.45, 0.005 + 1e-9, "c1"},
        {"tukey", 0.65, 0.51, 0.05, "c1"},
        {"liu", 0.59, 0.67, 0.05, "c2"},
    };
    for (const Row& row : rows) {
        RuleChoice rule = parse_rule(row.rule);
        DepthSpec spec = rule.spec;
        if (spec.kind == DepthSpec::Kind::TukeyHalfspace ||
            spec.kind == DepthSpec::Kind::LiuSimplicial)
            spec.with_grid_resolution(cfg.resolution);
        ElectionOutcome o = elect(m, spec);
        rep.check_point(std::string("deepest ") + row.rule, o.aggregated, row.e1, row.e2,
                        row.tol);
        bool winner_ok = o.winner && m.candidate_labels()[*o.winner] == row.winner;
        rep.check(std::string("winner ") + row.rule, winner_ok,
                  std::string("expected ") + row.winner);
    }

    // Quantized ballots, cell by cell.
    {
        const double disc1[] = {0.4, 0.4, 0.4, 0.4, 0.4, 0.4, 0.4, 0.4,
                                0.4, 0.4, 0.8, 0.8, 0.8, 0.8, 0.8};
        const double disc2[] = {0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6, 0.6,
                                0.6, 0.6, 0.0, 0.0, 0.0, 0.0, 0.0};
        const double bin1[] = {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1};
        const double bin2[] = {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0};
        GradingMatrix disc = quantize(m, GradeScale::discrete(5));
        GradingMatrix bin = quantize(m, GradeScale::binary());
        int bad = 0;
        for (std::size_t j = 0; j < 15; ++j) {
            if (disc(0, j) != disc1[j] || disc(1, j) != disc2[j]) ++bad;
            if (bin(0, j) != bin1[j] || bin(1, j) != bin2[j]) ++bad;
        }
        rep.check("quantization grid + top-choice columns", bad == 0,
                  bad ? std::to_string(bad) + " cells differ" : "30 + 30 cells exact");
    }

    // Depth surface datasets over the ballot square.
    {
        const struct {
            const char* rule;
            double e1, e2, tol;
        } surfaces[] = {
            {"wl1", 0.54, 0.67, 0.03},
            {"wl2", 0.64, 0.53, 0.03},
            {"tukey", 0.65, 0.51, 0.07},
            {"liu", 0.59, 0.67, 0.07},
        };
        for (const auto& s : surfaces) {
            RuleChoice rule = parse_rule(s.rule);
            DepthGrid g = depth_grid(m, rule.spec, 0.02);
            bool bounds_ok = true;
            double best = -1.0;
            for (std::size_t i1 = 0; i1 < g.nodes.size(); ++i1)
                for (std::size_t i2 = 0; i2 < g.nodes.size(); ++i2) {
                    double v = g.value_at(i1, i2);
                    if (!(v >= 0.0 && v <= 1.0)) bounds_ok = false;
                    best = std::max(best, v);
                }
            // Centroid of the maximizing nodes; the integral depths plateau.
            Profile argmax = {0.0, 0.0};
            std::size_t hits = 0;
            for (std::size_t i1 = 0; i1 < g.nodes.size(); ++i1)
                for (std::size_t i2 = 0; i2 < g.nodes.size(); ++i2)
                    if (g.value_at(i1, i2) >= best - 1e-12) {
                        argmax[0] += g.nodes[i1];
                        argmax[1] += g.nodes[i2];
                        ++hits;
                    }
            argmax[0] /= hits;
            argmax[1] /= hits;
            rep.check_point(std::string("surface argmax ") + s.rule, argmax, s.e1, s.e2,
                            s.tol);
            rep.check(std::string("surface bounds ") + s.rule, bounds_ok,
                      "values within [0, 1]");
        }
    }

    // Pairwise-dominance paradoxes of the stored configurations.
    {
        CondorcetAudit med = check_condorcet(condorcet_case_median(), DepthSpec::wlp(1.0));
        rep.check("median rule elects the pairwise loser",
                  med.winner_paradox && med.loser_paradox && med.outcome.winner &&
                      *med.outcome.winner == 1 && med.winner && *med.winner == 0,
                  "winner c2, dominant c1");
        for (double p : {2.0, 3.0}) {
            GradingMatrix cfg_m = condorcet_case_power(p, 10);
            CondorcetAudit a = check_condorcet(cfg_m, DepthSpec::wlp(p));
            std::array<double, 3> want = condorcet_case_power_expected(p, 10);
            DeepestResult got = deepest_wlp(cfg_m, p);
            bool coords_ok = true;
            for (int i = 0; i < 3; ++i)
                if (std::fabs(got.canonical[i] - want[i]) > 1e-8) coords_ok = false;
            rep.check("power-family paradox p=" + std::to_string(static_cast<int>(p)),
                      a.winner_paradox && a.loser_paradox && coords_ok,
                      "paradox flags + closed-form coordinates");
        }
    }

    // Abstention and split paradoxes.
    {
        GradingMatrix sub = noshow_case_subquadratic(0.1);
        auto w15 = check_noshow(sub, DepthSpec::wlp(1.5));
        rep.check("abstention witness p=1.5", w15.size() == 1 && w15[0].voter == 2,
                  "voter v3");
        GradingMatrix sup = noshow_case_superquadratic(0.05);
        auto w3 = check_noshow(sup, DepthSpec::wlp(3.0));
        rep.check("abstention witness p=3", w3.size() == 1 && w3[0].voter == 2,
                  "voter v3");
        GradingMatrix part1 = sub.without_voter(2);          // v1, v2
        GradingMatrix part2 = sub.without_voter(0).without_voter(0);  // v3
        auto split = check_reinforcement(part1, part2, DepthSpec::wlp(1.5));
        rep.check("split witness p=1.5", split.has_value() && split->candidate == 1,
                  "candidate c2 wins both parts, loses the union");
        rep.check("no witnesses at p=2",
                  check_noshow(sub, DepthSpec::wlp(2.0)).empty() &&
                      !check_reinforcement(part1, part2, DepthSpec::wlp(2.0)),
                  "mean aggregation is additive");
    }

    out << (rep.all_ok ? "REPRODUCE OK\n" : "REPRODUCE FAILED\n");
    return rep.all_ok ? 0 : 2;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case RunConfig::Command::Elect: return cmd_elect(cfg, out);
            case RunConfig::Command::DepthGrid: return cmd_depth_grid(cfg, out);
            case RunConfig::Command::Audit: return cmd_audit(cfg, out);
            case RunConfig::Command::Axioms: return cmd_axioms(cfg, out);
            case RunConfig::Command::Reproduce: return cmd_reproduce(cfg, out);
        }
        err << "error: unknown command\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << " (line " << e.row() << ", cell " << e.column()
            << ")\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace dv::cli
