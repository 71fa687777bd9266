#ifndef DV_VOTING_HPP_
#define DV_VOTING_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dv/deepest.hpp"
#include "dv/depth.hpp"
#include "dv/grades.hpp"

namespace dv {

enum class TieBreak { ReportTie, LowestIndex, LabelOrder };

std::string to_string(TieBreak tb);

struct ElectionOutcome {
    std::string rule_name;     // depth identifier, e.g. "wl2"
    std::string catalog_name;  // familiar rule the depth choice reduces to, if any
    TieBreak tiebreak = TieBreak::ReportTie;
    std::vector<std::size_t> winner_set;   // argmax coordinates, ascending
    std::optional<std::size_t> winner;     // resolved winner, if any
    std::vector<double> aggregated;        // canonical deepest point
    DeepestResult deepest;
};

// Upper-middle order statistic: the median for odd n, the greater of the two
// middle grades for even n.
double majority_grade(std::vector<double> grades);

// Arithmetic mean over an order-canonicalized copy of the grades.
double range_grade(std::vector<double> grades);

// The candidate with the highest coordinate of the deepest point wins.
ElectionOutcome elect(const GradingMatrix& m, const DepthSpec& spec,
                      TieBreak tb = TieBreak::ReportTie);

}  // namespace dv

#endif  // DV_VOTING_HPP_
