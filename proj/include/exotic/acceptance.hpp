#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace exotic {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;   // failure description or a short summary of what was checked
    double seconds = 0.0;
};

// Runs the full verification suite. Each criterion has its own size bound;
// mMax caps every bound (pass 10 or more for the complete run).
std::vector<CriterionResult> runAcceptanceSuite(int mMax);

bool allPassed(const std::vector<CriterionResult>& results);

// One "PASS"/"FAIL" line per criterion plus a summary line.
void printResults(const std::vector<CriterionResult>& results, std::ostream& os);

} // namespace exotic
