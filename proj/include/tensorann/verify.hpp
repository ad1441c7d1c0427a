#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tensorann {

struct CriterionResult {
    int id = 0;
    std::string group;
    std::string title;
    bool correct = false;
    double seconds = 0;
    double time_limit = 0;  // seconds
    std::string detail;

    bool passed() const { return correct && seconds <= time_limit; }
};

/// order, branching, casimir, annihilators, sl2.
const std::vector<std::string>& verification_groups();

/// Runs the acceptance criteria of one group, or all of them for "all". Throws
/// std::invalid_argument for an unknown group name.
std::vector<CriterionResult> run_criteria(std::string_view group);

/// Runs a single criterion by number (1 to 14).
CriterionResult run_criterion(int id);

}  // namespace tensorann
