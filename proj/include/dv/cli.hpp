#ifndef DV_CLI_HPP_
#define DV_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "dv/audit.hpp"
#include "dv/voting.hpp"

namespace dv::cli {

using json = nlohmann::ordered_json;

struct RuleChoice {
    DepthSpec spec;
    std::string alias;           // the requested name, e.g. "mj"
    bool requires_binary = false;
};

// Accepts wl1, wl2, wl3, wlinf, wlp:<p>, tukey, liu, and the familiar
// aliases mj, rv, approval.  Throws std::invalid_argument otherwise.
RuleChoice parse_rule(const std::string& rule);

TieBreak parse_tiebreak(const std::string& name);

struct RunConfig {
    enum class Command { Elect, DepthGrid, Audit, Axioms, Reproduce };
    Command command = Command::Elect;
    std::string input_path;
    std::string split_path;  // second electorate for the reinforcement check
    std::string rule = "wl1";
    std::string tiebreak = "report";
    double resolution = 0.005;
    std::string output = "json";  // or "csv"
    std::uint64_t seed = 0;
    int trials = 500;
};

json outcome_json(const ElectionOutcome& o, const GradingMatrix& m);
json audit_json(const AuditReport& r, const GradingMatrix& m);
json axiom_json(const AxiomReport& r);

// Returns the process exit status: 0 success, 1 bad input or configuration,
// 2 when the reproduction run finds a mismatch.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace dv::cli

#endif  // DV_CLI_HPP_
