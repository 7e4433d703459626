#pragma once

#include <string>
#include <vector>

namespace wg {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // computed-vs-expected summary, or notes
    double seconds = 0.0;
};

/// Run the acceptance checks. The small suite restricts the heavier
/// sweeps to weights that finish in seconds; the full suite runs the
/// complete ranges. Every check is exact; there are no tolerances to
/// tune anywhere.
std::vector<CriterionResult> run_acceptance(bool full);

}  // namespace wg
