#ifndef DV_AUDIT_HPP_
#define DV_AUDIT_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dv/voting.hpp"

namespace dv {

// wins(i, k) = number of voters grading candidate i strictly above k.
struct PairwiseTally {
    std::size_t d = 0;
    std::vector<int> wins;
    int at(std::size_t i, std::size_t k) const { return wins[i * d + k]; }
};

PairwiseTally pairwise_tally(const GradingMatrix& m);

// Strict-majority pairwise dominance; meaningful only with d >= 2.
std::optional<std::size_t> condorcet_winner(const GradingMatrix& m);
std::optional<std::size_t> condorcet_loser(const GradingMatrix& m);

struct CondorcetAudit {
    ElectionOutcome outcome;
    std::optional<std::size_t> winner;  // pairwise-dominant candidate
    std::optional<std::size_t> loser;
    bool winner_paradox = false;  // dominant candidate exists, not elected
    bool loser_paradox = false;   // dominated candidate is the unique winner
};

CondorcetAudit check_condorcet(const GradingMatrix& m, const DepthSpec& spec,
                               TieBreak tb = TieBreak::ReportTie);

struct NoShowWitness {
    std::size_t voter;
    std::size_t winner_with;     // elected when the voter participates
    std::size_t winner_without;  // elected when they abstain, preferred by them
};

// Voters whose abstention elects a candidate they grade strictly higher.
// Outcomes without a resolved winner never witness.
std::vector<NoShowWitness> check_noshow(const GradingMatrix& m, const DepthSpec& spec,
                                        TieBreak tb = TieBreak::ReportTie);

struct ReinforcementWitness {
    std::size_t candidate;                  // unique winner of both parts
    std::optional<std::size_t> combined_winner;  // who wins the union instead
};

// A witness exists when the same candidate uniquely wins both electorates
// but not their union.
std::optional<ReinforcementWitness> check_reinforcement(const GradingMatrix& part1,
                                                        const GradingMatrix& part2,
                                                        const DepthSpec& spec,
                                                        TieBreak tb = TieBreak::ReportTie);

struct AuditReport {
    std::string rule_name;
    CondorcetAudit condorcet;
    std::vector<NoShowWitness> noshow;
    bool reinforcement_checked = false;
    std::optional<ReinforcementWitness> reinforcement;
};

AuditReport run_audit(const GradingMatrix& m, const DepthSpec& spec,
                      TieBreak tb = TieBreak::ReportTie,
                      const GradingMatrix* split = nullptr);

// ---------------------------------------------------------------------------
// Randomized axiom checks
// ---------------------------------------------------------------------------

struct ConditionTally {
    int passed = 0;
    int failed = 0;
};

struct AxiomReport {
    std::string rule_name;
    int trials = 0;
    std::uint64_t seed = 0;
    ConditionTally neutrality;    // relabeling candidates relabels the outcome
    ConditionTally anonymity;     // relabeling voters changes nothing
    ConditionTally unanimity;     // a constant-alpha row aggregates to alpha, bit-exact
    ConditionTally monotonicity;  // raising a grade never lowers that coordinate
    ConditionTally iia;           // other rows do not affect a candidate's grade
    int strict_increases = 0;     // strict-monotonicity tally, reported unjudged
    int plateaus = 0;
    std::vector<std::string> counterexamples;  // serialized offending ballots
    bool all_passed() const {
        return neutrality.failed + anonymity.failed + unanimity.failed +
                   monotonicity.failed + iia.failed ==
               0;
    }
};

// Random matrices with 1-5 candidates, 1-30 voters, continuous grades.  The
// generator is a fixed 64-bit engine with an explicit bit mapping so reports
// reproduce across platforms.  Weighted-distance rules only.
AxiomReport check_axioms(const DepthSpec& spec, int trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Stored counterexample configurations
// ---------------------------------------------------------------------------

// Nine voters over three candidates where the p = 1 rule elects a candidate
// who loses every pairwise contest while a pairwise-dominant rival exists.
GradingMatrix condorcet_case_median();

// Parametric family for finite p > 1: n-1 clones nearly indifferent between
// three candidates and one outlier dragging the aggregate.  eps must satisfy
// 0 < eps <= min(0.5, (n-1)^(-1/(p-1))).
double condorcet_case_power_eps(double p, int n);
GradingMatrix condorcet_case_power(double p, int n);
// Closed-form deepest coordinates of that configuration.
std::array<double, 3> condorcet_case_power_expected(double p, int n);

// Three voters, two candidates.  The subquadratic case witnesses abstention
// and split paradoxes for p below 2 (and at p = 1); the superquadratic case
// for p above 2.  Neither produces witnesses at p = 2.
GradingMatrix noshow_case_subquadratic(double eps);
GradingMatrix noshow_case_superquadratic(double eps);

struct SplitInstance {
    GradingMatrix part1;
    GradingMatrix part2;
    std::size_t candidate = 0;  // witnessing candidate
};

// Seeded random search for a split paradox of the p = 1 rule over small
// two-candidate electorates graded on the five-level grid.
std::optional<SplitInstance> search_reinforcement_p1(std::uint64_t seed, int max_tries);

}  // namespace dv

#endif  // DV_AUDIT_HPP_
