#include "dv/cases.hpp"

namespace dv::cases {

namespace {

const char* kDemoCsv =
    "voter,c1,c2\n"
    "v1,0.59,0.67\n"
    "v2,0.49,0.79\n"
    "v3,0.45,0.73\n"
    "v4,0.43,0.66\n"
    "v5,0.46,0.79\n"
    "v6,0.44,0.71\n"
    "v7,0.54,0.79\n"
    "v8,0.59,0.67\n"
    "v9,0.43,0.78\n"
    "v10,0.48,0.63\n"
    "v11,0.95,0.13\n"
    "v12,0.95,0.17\n"
    "v13,0.92,0.14\n"
    "v14,0.91,0.15\n"
    "v15,0.95,0.10\n";

}  // namespace

const char* demo_csv() { return kDemoCsv; }

GradingMatrix demo_continuous() { return parse_ballots(kDemoCsv); }

GradingMatrix demo_discrete() {
    return quantize(demo_continuous(), GradeScale::discrete(5));
}

GradingMatrix demo_binary() {
    return quantize(demo_continuous(), GradeScale::binary());
}

}  // namespace dv::cases
