#pragma once

#include <string>
#include <vector>

namespace ghsd {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // key figures on success, first failing check otherwise
};

// Acceptance criteria 1..8; throws std::out_of_range for other indices.
CriterionResult run_criterion(int index);

std::vector<CriterionResult> run_acceptance();

}  // namespace ghsd
