#pragma once

#include <string>
#include <vector>

namespace casimir {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// The eleven release gates. Each one drives a public code path against an
// analytic limit, an algebraic identity, or an independently computed twin,
// with the tolerance pinned in the check itself. A check that throws is
// reported as a failure carrying the exception text.
std::vector<CheckResult> run_acceptance_checks();

bool all_passed(const std::vector<CheckResult>& checks);

// One line per check: "PASS  3 <name> | <detail>".
std::string render_report(const std::vector<CheckResult>& checks);

}  // namespace casimir
