#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace jfilt {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0;
    double limit = 0;  // seconds; 0 means no limit
    std::string detail;
};

// Runs all acceptance criteria, printing one PASS/FAIL line per criterion
// to `log`. A criterion over its time limit fails.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, std::ostream& log);

} // namespace jfilt
