#pragma once

#include <string>
#include <vector>

namespace circdet::cli {

struct SuiteOutcome {
    std::string suite;
    int N;
    bool passed;
    bool skipped = false;
    std::vector<std::string> notes;  // what was checked, or the first counterexample
};

const std::vector<std::string>& suite_names();  // oracle, symmetry, lemmas, counting, identities

// Runs one suite at one dimension. Throws std::invalid_argument for an unknown suite.
SuiteOutcome run_suite(const std::string& suite, int N, int jobs);

}  // namespace circdet::cli
