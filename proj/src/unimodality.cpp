#include "hookpart/unimodality.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hookpart {

int unimodal_mode(int n) {
    if (n < 6)
        throw std::invalid_argument("unimodal_mode: the strong-unimodality statement requires n >= 6, got " +
                                    std::to_string(n));
    return (n - 1) / 4;
}

UnimodalityReport check_strong_unimodality(const SequenceView& view, int n) {
    UnimodalityReport r;
    r.n = n;
    r.mode_expected = unimodal_mode(n);
    const int mode = r.mode_expected;

    r.strictly_increasing_prefix_ok = true;
    for (int m = 0; m < mode; ++m)
        if (!(view.a(n, m) < view.a(n, m + 1)))
            r.strictly_increasing_prefix_ok = false;

    r.strictly_decreasing_suffix_ok = true;
    for (int m = mode; m < n - 2; ++m)
        if (!(view.a(n, m) > view.a(n, m + 1)))
            r.strictly_decreasing_suffix_ok = false;

    r.tail_pair_is_one = view.a(n, n - 2) == 1 && view.a(n, n - 1) == 1;

    Int best = view.a(n, 0);
    for (int m = 1; m <= n - 2; ++m)
        best = std::max(best, Int(view.a(n, m)));
    for (int m = 0; m <= n - 2; ++m)
        if (view.a(n, m) == best)
            r.argmax_indices.push_back(m);
    return r;
}

CheckReport verify_strong_unimodality(const SequenceView& view, Range n_range) {
    CheckReport report;
    report.name = "strong-unimodality";
    for (int n = std::max(6, n_range.lo); n <= n_range.hi; ++n) {
        ++report.checked;
        UnimodalityReport r = check_strong_unimodality(view, n);
        if (!r.pass()) {
            std::ostringstream os;
            os << "row n=" << n << ": inc=" << r.strictly_increasing_prefix_ok
               << " dec=" << r.strictly_decreasing_suffix_ok << " argmax_count=" << r.argmax_indices.size();
            if (!r.argmax_indices.empty())
                os << " first_argmax=" << r.argmax_indices.front() << " expected=" << r.mode_expected;
            report.fail(os.str());
        }
        if (!r.tail_pair_is_one)
            report.fail("row n=" + std::to_string(n) + ": tail entries A(n,n-2), A(n,n-1) are not both 1");
    }
    return report;
}

Int log_concavity_defect(const SequenceView& view, int n) {
    if (n < 3)
        throw std::invalid_argument("log_concavity_defect: requires n >= 3");
    return view.a(n, n - 2) * view.a(n, n - 2) - view.a(n, n - 3) * view.a(n, n - 1);
}

CheckReport verify_log_concavity_defect(const SequenceView& view, Range n_range) {
    CheckReport report;
    report.name = "non-log-concavity-defect";
    for (int n = std::max(3, n_range.lo); n <= n_range.hi; ++n) {
        ++report.checked;
        if (log_concavity_defect(view, n) != 2 - n)
            report.fail("defect != 2-n at n=" + std::to_string(n));
    }
    return report;
}

namespace {

// 1/m < p/q < 7/9 for negative p = Delta(n-1,m), q = Delta(n,m): normalize
// to positive magnitudes first, then cross-multiply.
bool ratio_within_bounds(const Int& num, const Int& den, int m, std::string* why) {
    if (!(num < 0 && den < 0)) {
        if (why)
            *why = "expected both Delta values negative";
        return false;
    }
    const Int p = -num, q = -den; // ratio = p/q with p, q > 0
    if (!(q < m * p)) {           // 1/m < p/q
        if (why)
            *why = "lower bound 1/m fails";
        return false;
    }
    if (!(9 * p < 7 * q)) { // p/q < 7/9
        if (why)
            *why = "upper bound 7/9 fails";
        return false;
    }
    return true;
}

} // namespace

CheckReport check_ratio_bounds(const SequenceView& view, int m) {
    if (m < 5)
        throw std::invalid_argument("check_ratio_bounds: requires m >= 5");
    CheckReport report;
    report.name = "ratio-bounds-7:9";
    for (int n = m + 4; n <= 4 * m - 2; ++n) {
        ++report.checked;
        std::string why;
        if (!ratio_within_bounds(view.delta(n - 1, m), view.delta(n, m), m, &why))
            report.fail(why + " at (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
    }
    return report;
}

CheckReport verify_ratio_bounds(const SequenceView& view, Range m_range) {
    CheckReport report;
    report.name = "ratio-bounds-7:9";
    for (int m = std::max(5, m_range.lo); m <= m_range.hi; ++m)
        report.merge(check_ratio_bounds(view, m));
    return report;
}

bool check_upper_10_9(const SequenceView& view, int m) {
    if (m < 3)
        throw std::invalid_argument("check_upper_10_9: requires m >= 3");
    const Int num = view.delta(4 * m - 2, m);
    const Int den = view.delta(4 * m - 1, m);
    if (!(num < 0 && den < 0))
        return false;
    return 9 * (-num) < 10 * (-den); // (-num)/(-den) < 10/9
}

CheckReport verify_upper_10_9(const SequenceView& view, Range m_range) {
    CheckReport report;
    report.name = "ratio-bound-10:9";
    for (int m = std::max(3, m_range.lo); m <= m_range.hi; ++m) {
        ++report.checked;
        if (!check_upper_10_9(view, m))
            report.fail("bound fails at m=" + std::to_string(m));
    }
    return report;
}

CheckReport check_sign_pattern(const SequenceView& view, int n_max) {
    if (n_max < 6)
        throw std::invalid_argument("check_sign_pattern: requires n_max >= 6");
    CheckReport report;
    report.name = "delta-sign-pattern";
    for (int n = 6; n <= n_max; ++n) {
        for (int m = 0; m <= n - 1; ++m) {
            if (m + 2 <= n && n <= 4 * m) {
                ++report.checked;
                if (!(view.delta(n, m) < 0))
                    report.fail("Delta not negative at (n=" + std::to_string(n) + ", m=" +
                                std::to_string(m) + ")");
            } else if (n >= 4 * m + 1) {
                ++report.checked;
                if (!(view.delta(n, m) > 0))
                    report.fail("Delta not positive at (n=" + std::to_string(n) + ", m=" +
                                std::to_string(m) + ")");
            }
        }
    }
    // monotone growth past the mode column: Delta(n,m) > Delta(n-1,m)
    for (int m = 0; 4 * m + 1 <= n_max; ++m) {
        const int n0 = std::max(6, 4 * m + 1);
        for (int n = n0; n <= n_max; ++n) {
            ++report.checked;
            if (!(view.delta(n, m) > view.delta(n - 1, m)))
                report.fail("Delta(n,m) not increasing at (n=" + std::to_string(n) + ", m=" +
                            std::to_string(m) + ")");
        }
    }
    return report;
}

} // namespace hookpart
