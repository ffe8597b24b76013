// The integration acceptance suite: ten end-to-end checks covering table
// reproduction, cross-validation of the three computation routes, the
// unimodality and certificate verifications at full depth, and the root
// geometry pipeline. Each criterion carries its pinned ranges and
// tolerances; run_acceptance reports one result per criterion.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hookpart {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;

    std::string to_line() const;
};

/// Runs all ten criteria in order. When progress is non-null, one line per
/// finished criterion is streamed to it.
std::vector<CriterionResult> run_acceptance(std::ostream* progress = nullptr);

} // namespace hookpart
