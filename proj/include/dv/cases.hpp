#ifndef DV_CASES_HPP_
#define DV_CASES_HPP_

#include "dv/grades.hpp"

namespace dv::cases {

// Bundled two-candidate election of fifteen voters: a moderate majority
// split over the candidates and a cohesive minority bloc, useful for
// comparing how the depth rules disagree on the same ballots.
GradingMatrix demo_continuous();

// The same ballots floored onto the five-level grid.
GradingMatrix demo_discrete();

// The same ballots reduced to each voter's top choice.
GradingMatrix demo_binary();

// demo_continuous() in ballot CSV form.
const char* demo_csv();

}  // namespace dv::cases

#endif  // DV_CASES_HPP_
