#pragma once

#include <string>
#include <vector>

namespace gtop {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;   // what was computed; on failure, why
    std::vector<std::string> failures;
    double seconds = 0;
    double limit = 0;     // wall-clock bound in seconds
};

inline constexpr int kCriteria = 15;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {});
// "[PASS]  3  title (0.12s / 300s): detail"
std::string format_line(const CriterionResult& r);

}  // namespace gtop
