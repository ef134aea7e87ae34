#pragma once

// The full verification suite: every check is exact (tolerance zero) and
// reports a machine-readable result.  Used both by the command-line
// `verify` subcommand and by the acceptance test binary.

#include <string>
#include <vector>

#include "json.hpp"

namespace wbm {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    nlohmann::json witness; // details: counts, or the first failing instance
};

struct VerifyOptions {
    int max_n = 3;
    unsigned long seed = 7;
    bool with_properties = false; // append randomized property checks
};

std::vector<CheckResult> run_verification(const VerifyOptions& opt);

} // namespace wbm
