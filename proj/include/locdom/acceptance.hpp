#pragma once

#include <chrono>
#include <string>
#include <vector>

namespace locdom {

struct ExactValueRow {
    std::string graph;
    std::string mode;
    int expected = 0;
    // Proved optimum, or the best known value when timed out.
    int got = -1;
    bool timed_out = false;
    bool passed = false;
};

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct AcceptanceReport {
    // One row per reproduced exact value (criterion 1).
    std::vector<ExactValueRow> rows;
    // One entry per acceptance criterion.
    std::vector<CriterionResult> criteria;
    bool all_passed = false;
};

// Runs the full acceptance suite. large_budget caps each of the two
// order-23 solves; every other instance gets 60 seconds.
AcceptanceReport run_acceptance(
    std::chrono::milliseconds large_budget = std::chrono::minutes(25));

}  // namespace locdom
