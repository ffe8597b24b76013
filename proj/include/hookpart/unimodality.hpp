// Strong-unimodality verification for the rows of the A-triangle, the
// non-log-concavity defect, the exact-rational ratio bounds on Delta, and
// the equivalent sign-pattern formulation. Everything here is exact
// integer arithmetic; ratio comparisons are done by cross-multiplication,
// never floating point.
#pragma once

#include "hookpart/certificates.hpp"
#include "hookpart/report.hpp"
#include "hookpart/sequence.hpp"

namespace hookpart {

/// The predicted mode floor((n-1)/4) of row n. Strong unimodality only
/// starts at n = 6 (row 5 has a plateau), so smaller n is rejected.
int unimodal_mode(int n);

struct UnimodalityReport {
    int n = 0;
    int mode_expected = 0;
    bool strictly_increasing_prefix_ok = false;
    bool strictly_decreasing_suffix_ok = false;
    bool tail_pair_is_one = false; // A(n,n-2) == A(n,n-1) == 1, outside the strict chain
    std::vector<int> argmax_indices;

    bool pass() const {
        return strictly_increasing_prefix_ok && strictly_decreasing_suffix_ok &&
               argmax_indices.size() == 1 && argmax_indices.front() == mode_expected;
    }
};

/// Checks A(n,0) < ... < A(n,m*) > ... > A(n,n-2) with m* = floor((n-1)/4).
/// The final entry A(n,n-1) sits outside the strict chain and is reported
/// separately via tail_pair_is_one.
UnimodalityReport check_strong_unimodality(const SequenceView& view, int n);

CheckReport verify_strong_unimodality(const SequenceView& view, Range n_range);

/// A(n,n-2)^2 - A(n,n-3) A(n,n-1); equals 2-n for every n >= 3.
Int log_concavity_defect(const SequenceView& view, int n);

CheckReport verify_log_concavity_defect(const SequenceView& view, Range n_range);

/// For fixed m >= 5 checks 1/m < Delta(n-1,m)/Delta(n,m) < 7/9 for every
/// n in [m+4, 4m-2], after verifying both Delta values are negative.
CheckReport check_ratio_bounds(const SequenceView& view, int m);

CheckReport verify_ratio_bounds(const SequenceView& view, Range m_range);

/// Delta(4m-2,m)/Delta(4m-1,m) < 10/9, exact comparison; m >= 3.
bool check_upper_10_9(const SequenceView& view, int m);

CheckReport verify_upper_10_9(const SequenceView& view, Range m_range);

/// For all 6 <= n <= n_max and all m: Delta(n,m) < 0 when m+2 <= n <= 4m,
/// Delta(n,m) > 0 when n >= 4m+1; and Delta(n,m) increases strictly in n
/// from n = max(6, 4m+1) on.
CheckReport check_sign_pattern(const SequenceView& view, int n_max);

} // namespace hookpart
