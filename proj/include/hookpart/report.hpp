// Line-oriented verification reports: one PASS/FAIL line per claim.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hookpart {

struct CheckReport {
    std::string name;
    long long checked = 0;
    std::vector<std::string> violations;
    static constexpr std::size_t kMaxStoredViolations = 64;
    long long dropped_violations = 0;

    bool pass() const { return violations.empty() && dropped_violations == 0; }

    void fail(std::string what) {
        if (violations.size() < kMaxStoredViolations)
            violations.push_back(std::move(what));
        else
            ++dropped_violations;
    }

    void merge(const CheckReport& other) {
        checked += other.checked;
        for (const auto& v : other.violations)
            fail(v);
        dropped_violations += other.dropped_violations;
    }

    /// "PASS <name> checked=<k>" or one "FAIL <name>: <detail>" line per violation.
    std::string to_lines() const {
        std::string out;
        if (pass()) {
            out = "PASS " + name + " checked=" + std::to_string(checked) + "\n";
        } else {
            for (const auto& v : violations)
                out += "FAIL " + name + ": " + v + "\n";
            if (dropped_violations > 0)
                out += "FAIL " + name + ": (+" + std::to_string(dropped_violations) +
                       " further violations)\n";
        }
        return out;
    }
};

} // namespace hookpart
