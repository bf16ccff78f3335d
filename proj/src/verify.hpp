#pragma once

#include "jsonio.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace flagk {

/**
 * Named self-check suites. Each suite runs a family of exact identities and
 * aggregates one CheckResult per case; a failed case carries a diagnostic
 * for the first counterexample found. Randomized suites draw from the given
 * seed only, so runs are reproducible.
 */
struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

// Suite names accepted by run_suite, including the umbrella "all".
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown name.
Report run_suite(const std::string& name, std::uint64_t seed);

Json report_to_json(const Report& r);

}  // namespace flagk
