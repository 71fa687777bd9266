#include "dv/audit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace dv {

PairwiseTally pairwise_tally(const GradingMatrix& m) {
    if (m.candidates() == 0 || m.voters() == 0)
        throw std::invalid_argument("empty grading matrix");
    PairwiseTally t;
    t.d = m.candidates();
    t.wins.assign(t.d * t.d, 0);
    for (std::size_t i = 0; i < t.d; ++i)
        for (std::size_t k = 0; k < t.d; ++k) {
            if (i == k) continue;
            int w = 0;
            for (std::size_t j = 0; j < m.voters(); ++j)
                if (m(i, j) > m(k, j)) ++w;
            t.wins[i * t.d + k] = w;
        }
    return t;
}

namespace {

// Strict majority: more than half of the voters.
bool beats(const PairwiseTally& t, std::size_t i, std::size_t k, std::size_t n) {
    return 2 * t.at(i, k) > static_cast<int>(n);
}

}  // namespace

std::optional<std::size_t> condorcet_winner(const GradingMatrix& m) {
    if (m.candidates() < 2) return std::nullopt;
    PairwiseTally t = pairwise_tally(m);
    for (std::size_t i = 0; i < t.d; ++i) {
        bool all = true;
        for (std::size_t k = 0; k < t.d && all; ++k)
            if (k != i && !beats(t, i, k, m.voters())) all = false;
        if (all) return i;
    }
    return std::nullopt;
}

std::optional<std::size_t> condorcet_loser(const GradingMatrix& m) {
    if (m.candidates() < 2) return std::nullopt;
    PairwiseTally t = pairwise_tally(m);
    for (std::size_t i = 0; i < t.d; ++i) {
        bool all = true;
        for (std::size_t k = 0; k < t.d && all; ++k)
            if (k != i && !beats(t, k, i, m.voters())) all = false;
        if (all) return i;
    }
    return std::nullopt;
}

CondorcetAudit check_condorcet(const GradingMatrix& m, const DepthSpec& spec, TieBreak tb) {
    CondorcetAudit a;
    a.outcome = elect(m, spec, tb);
    a.winner = condorcet_winner(m);
    a.loser = condorcet_loser(m);
    if (a.winner) {
        bool elected = std::find(a.outcome.winner_set.begin(), a.outcome.winner_set.end(),
                                 *a.winner) != a.outcome.winner_set.end();
        a.winner_paradox = !elected;
    }
    if (a.loser) a.loser_paradox = a.outcome.winner && *a.outcome.winner == *a.loser;
    return a;
}

std::vector<NoShowWitness> check_noshow(const GradingMatrix& m, const DepthSpec& spec,
                                        TieBreak tb) {
    if (m.voters() < 2)
        throw std::invalid_argument("abstention check needs at least two voters");
    std::vector<NoShowWitness> out;
    ElectionOutcome full = elect(m, spec, tb);
    if (!full.winner) return out;  // unresolved outcome: no one can improve on it
    for (std::size_t j = 0; j < m.voters(); ++j) {
        ElectionOutcome sub = elect(m.without_voter(j), spec, tb);
        if (!sub.winner) continue;
        if (m(*sub.winner, j) > m(*full.winner, j))
            out.push_back({j, *full.winner, *sub.winner});
    }
    return out;
}

std::optional<ReinforcementWitness> check_reinforcement(const GradingMatrix& part1,
                                                        const GradingMatrix& part2,
                                                        const DepthSpec& spec, TieBreak tb) {
    if (part1.candidates() != part2.candidates() ||
        part1.candidate_labels() != part2.candidate_labels())
        throw std::invalid_argument("parts grade different candidates");
    if (part1.voters() == 0 || part2.voters() == 0) return std::nullopt;
    ElectionOutcome o1 = elect(part1, spec, tb);
    ElectionOutcome o2 = elect(part2, spec, tb);
    if (!o1.winner || !o2.winner || *o1.winner != *o2.winner) return std::nullopt;
    ElectionOutcome oc = elect(GradingMatrix::concat_voters(part1, part2), spec, tb);
    if (oc.winner && *oc.winner == *o1.winner) return std::nullopt;
    return ReinforcementWitness{*o1.winner, oc.winner};
}

AuditReport run_audit(const GradingMatrix& m, const DepthSpec& spec, TieBreak tb,
                      const GradingMatrix* split) {
    AuditReport r;
    r.rule_name = spec.id();
    r.condorcet = check_condorcet(m, spec, tb);
    if (m.voters() >= 2) r.noshow = check_noshow(m, spec, tb);
    if (split) {
        r.reinforcement_checked = true;
        r.reinforcement = check_reinforcement(m, *split, spec, tb);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Randomized axiom checks
// ---------------------------------------------------------------------------

namespace {

// Fixed generator with an explicit output mapping: raw mt19937_64 words,
// uniform doubles from the top 53 bits, bounded integers by modulo.  The
// standard distributions vary across library implementations; this does not.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double unit() { return (eng() >> 11) * 0x1.0p-53; }
    std::size_t below(std::size_t k) { return static_cast<std::size_t>(eng() % k); }
};

GradingMatrix random_matrix(Rng& rng, std::size_t d, std::size_t n) {
    GradingMatrix m(d, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.unit();
    return m;
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t k) {
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    for (std::size_t i = k; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    return perm;
}

Profile aggregate(const GradingMatrix& m, const DepthSpec& spec) {
    return deepest(m, spec).canonical;
}

}  // namespace

AxiomReport check_axioms(const DepthSpec& spec, int trials, std::uint64_t seed) {
    if (spec.kind != DepthSpec::Kind::WLp && spec.kind != DepthSpec::Kind::WLinf)
        throw std::invalid_argument(
            "axiom checks cover the weighted-distance rules; geometric depths are "
            "lattice-bound and checked separately");
    if (trials < 1) throw std::invalid_argument("need at least one trial");

    AxiomReport report;
    report.rule_name = spec.id();
    report.trials = trials;
    report.seed = seed;
    Rng rng(seed);

    auto record = [&report](ConditionTally& tally, bool ok, const GradingMatrix& m) {
        if (ok) {
            ++tally.passed;
        } else {
            ++tally.failed;
            if (report.counterexamples.size() < 8)
                report.counterexamples.push_back(serialize_ballots(m));
        }
    };

    for (int trial = 0; trial < trials; ++trial) {
        std::size_t d = 1 + rng.below(5);
        std::size_t n = 1 + rng.below(30);
        GradingMatrix m = random_matrix(rng, d, n);
        Profile base = aggregate(m, spec);

        // Condition 1, neutrality: permuting candidate rows permutes the
        // aggregated grades the same way, bit for bit.
        {
            std::vector<std::size_t> perm = random_permutation(rng, d);
            Profile permuted = aggregate(m.permuted_candidates(perm), spec);
            bool ok = true;
            for (std::size_t i = 0; i < d; ++i)
                if (permuted[i] != base[perm[i]]) ok = false;
            record(report.neutrality, ok, m);
        }

        // Condition 2, anonymity: permuting voter columns changes nothing.
        {
            std::vector<std::size_t> perm = random_permutation(rng, n);
            Profile permuted = aggregate(m.permuted_voters(perm), spec);
            record(report.anonymity, permuted == base, m);
        }

        // Condition 3, unanimity: a row of identical grades aggregates to
        // that grade exactly.
        {
            GradingMatrix planted = m;
            std::size_t row = rng.below(d);
            double alpha = rng.unit();
            for (std::size_t j = 0; j < n; ++j) planted(row, j) = alpha;
            Profile agg = aggregate(planted, spec);
            record(report.unanimity, agg[row] == alpha, planted);
        }

        // Condition 4, monotonicity: raising one grade of candidate i never
        // lowers coordinate i.  The slack absorbs solver noise only.
        {
            GradingMatrix raised = m;
            std::size_t i = rng.below(d);
            std::size_t j = rng.below(n);
            double delta = 0.05 + 0.45 * rng.unit();
            double lifted = std::min(1.0, raised(i, j) + delta);
            bool strictly_raised = lifted > raised(i, j);
            raised(i, j) = lifted;
            Profile agg = aggregate(raised, spec);
            record(report.monotonicity, agg[i] >= base[i] - 1e-9, raised);
            if (strictly_raised) {
                if (agg[i] > base[i])
                    ++report.strict_increases;
                else
                    ++report.plateaus;
            }
        }

        // Condition 5, independence: replacing every other row leaves
        // candidate i's aggregated grade bit-identical.
        {
            std::size_t keep = rng.below(d);
            GradingMatrix other = random_matrix(rng, d, n);
            for (std::size_t j = 0; j < n; ++j) other(keep, j) = m(keep, j);
            Profile agg = aggregate(other, spec);
            record(report.iia, agg[keep] == base[keep], other);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Stored counterexample configurations
// ---------------------------------------------------------------------------

GradingMatrix condorcet_case_median() {
    std::vector<std::vector<double>> rows(3);
    for (int v = 0; v < 4; ++v) {
        rows[0].push_back(0.5);
        rows[1].push_back(0.1);
        rows[2].push_back(0.4);
    }
    rows[0].push_back(0.5);
    rows[1].push_back(0.6);
    rows[2].push_back(0.4);
    for (int v = 0; v < 4; ++v) {
        rows[0].push_back(1.0);
        rows[1].push_back(0.6);
        rows[2].push_back(0.7);
    }
    return GradingMatrix::from_rows(rows);
}

double condorcet_case_power_eps(double p, int n) {
    if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("requires finite p > 1");
    if (n < 3) throw std::invalid_argument("requires at least three voters");
    double bound = std::min(0.5, std::pow(n - 1.0, -1.0 / (p - 1.0)));
    return bound / 2.0;  // safely interior to the admissible range
}

GradingMatrix condorcet_case_power(double p, int n) {
    double eps = condorcet_case_power_eps(p, n);
    std::vector<std::vector<double>> rows(3);
    for (int v = 0; v < n - 1; ++v) {
        rows[0].push_back(0.5 + eps);
        rows[1].push_back(0.5);
        rows[2].push_back(0.5 + eps / 2.0);
    }
    rows[0].push_back(0.0);
    rows[1].push_back(1.0);
    rows[2].push_back(0.0);
    return GradingMatrix::from_rows(rows);
}

std::array<double, 3> condorcet_case_power_expected(double p, int n) {
    double eps = condorcet_case_power_eps(p, n);
    double a = std::pow(n - 1.0, 1.0 / (p - 1.0));
    return {(0.5 + eps) * a / (a + 1.0),
            (1.0 + 0.5 * a) / (1.0 + a),
            (0.5 + eps / 2.0) * a / (a + 1.0)};
}

GradingMatrix noshow_case_subquadratic(double eps) {
    if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("eps must be in (0, 0.5)");
    return GradingMatrix::from_rows({{0.5, 0.5, 0.0}, {1.0, eps, eps}});
}

GradingMatrix noshow_case_superquadratic(double eps) {
    if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("eps must be in (0, 0.5)");
    return GradingMatrix::from_rows({{0.0, 1.0, 0.0}, {0.5 + eps, 0.5 + eps, eps}});
}

std::optional<SplitInstance> search_reinforcement_p1(std::uint64_t seed, int max_tries) {
    Rng rng(seed);
    DepthSpec rule = DepthSpec::wlp(1.0);
    for (int t = 0; t < max_tries; ++t) {
        std::size_t n1 = 1 + rng.below(3);
        std::size_t n2 = 1 + rng.below(3);
        GradingMatrix p1(2, n1), p2(2, n2);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < n1; ++j) p1(i, j) = rng.below(6) / 5.0;
            for (std::size_t j = 0; j < n2; ++j) p2(i, j) = rng.below(6) / 5.0;
        }
        auto witness = check_reinforcement(p1, p2, rule);
        if (witness) return SplitInstance{p1, p2, witness->candidate};
    }
    return std::nullopt;
}

}  // namespace dv
