#include "dv/voting.hpp"

#include <algorithm>
#include <stdexcept>

namespace dv {

std::string to_string(TieBreak tb) {
    switch (tb) {
        case TieBreak::ReportTie: return "report";
        case TieBreak::LowestIndex: return "lowest";
        case TieBreak::LabelOrder: return "label";
    }
    return "?";
}

double majority_grade(std::vector<double> grades) {
    if (grades.empty()) throw std::invalid_argument("no grades");
    std::sort(grades.begin(), grades.end());
    return grades[grades.size() / 2];
}

double range_grade(std::vector<double> grades) {
    if (grades.empty()) throw std::invalid_argument("no grades");
    std::sort(grades.begin(), grades.end());
    if (grades.front() == grades.back()) return grades.front();
    double s = 0.0;
    for (double g : grades) s += g;
    return s / grades.size();
}

namespace {

std::string catalog_name(const DepthSpec& spec, const GradeScale& scale) {
    if (spec.kind == DepthSpec::Kind::WLp && spec.p == 1.0) return "majority-judgment";
    if (spec.kind == DepthSpec::Kind::WLp && spec.p == 2.0)
        return scale.kind() == GradeScale::Kind::Binary ? "approval-voting" : "range-voting";
    if (spec.kind == DepthSpec::Kind::WLinf) return "midrange-voting";
    return "";
}

}  // namespace

ElectionOutcome elect(const GradingMatrix& m, const DepthSpec& spec, TieBreak tb) {
    if (m.candidates() == 0 || m.voters() == 0)
        throw std::invalid_argument("empty grading matrix");

    ElectionOutcome o;
    o.rule_name = spec.id();
    o.catalog_name = catalog_name(spec, m.scale());
    o.tiebreak = tb;
    o.deepest = deepest(m, spec);
    o.aggregated = o.deepest.canonical;

    // Iterative coordinates carry solver noise; closed forms and grid
    // centroids are compared exactly.
    double tol = o.deepest.method == DeepestResult::Method::ScalarOptimizer ? 1e-12 : 0.0;
    double best = *std::max_element(o.aggregated.begin(), o.aggregated.end());
    for (std::size_t i = 0; i < o.aggregated.size(); ++i)
        if (o.aggregated[i] >= best - tol) o.winner_set.push_back(i);

    if (o.winner_set.size() == 1) {
        o.winner = o.winner_set.front();
    } else if (tb == TieBreak::LowestIndex) {
        o.winner = o.winner_set.front();
    } else if (tb == TieBreak::LabelOrder) {
        std::size_t best_i = o.winner_set.front();
        for (std::size_t i : o.winner_set)
            if (m.candidate_labels()[i] < m.candidate_labels()[best_i]) best_i = i;
        o.winner = best_i;
    }
    return o;
}

}  // namespace dv
