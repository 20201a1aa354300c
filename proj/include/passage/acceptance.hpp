// The bundled verification suite: one entry per release criterion, each
// with its tolerance pinned in code. The CLI `verify` subcommand and the
// acceptance test binary both run these.
#pragma once

#include <string>
#include <vector>

namespace passage {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
};

// suite: "analytic" (fast, deterministic), "mc" (Monte Carlo, minutes), "all".
std::vector<CriterionResult> run_acceptance(const std::string& suite);

}  // namespace passage
