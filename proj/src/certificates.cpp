#include "hookpart/certificates.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hookpart {

long long delta_certificate_coeff(int j, long long n, long long m) {
    switch (j) {
    case 0: return -(n - m) * (n - 4 * m - 1);
    case 1: return 2 * (n - m - 1) * (n - 4 * m);
    case 2: return 2 * m * (n - 4 * m - 1);
    case 3: return -(n - 1) * (n - 4 * m);
    default: throw std::invalid_argument("delta_certificate_coeff: j must be 0..3");
    }
}

long long g_certificate_coeff(int j, long long n, long long m) {
    switch (j) {
    case 0: return (n + 1) * (2 * n * n - 13 * m * n + 10 * n + 20 * m * m - 32 * m + 12);
    case 1: return -m * (4 * n * n - 26 * m * n + 21 * n + 40 * m * m - 74 * m + 29);
    case 2:
        return -4 * n * n * n + 30 * m * n * n - 24 * n * n - 66 * m * m * n + 119 * m * n -
               44 * n + 40 * m * m * m - 140 * m * m + 109 * m - 24;
    case 3: return (n - m + 3) * (2 * n * n - 13 * m * n + 6 * n + 20 * m * m - 19 * m + 4);
    default: throw std::invalid_argument("g_certificate_coeff: j must be 0..3");
    }
}

CheckReport check_order3_certificate(const std::string& name,
                                     const std::function<long long(int, long long, long long)>& coeff,
                                     const std::function<Int(int, int)>& seq, int step,
                                     Range n_range, Range m_range) {
    CheckReport report;
    report.name = name;
    for (int n = n_range.lo; n <= n_range.hi; ++n) {
        const int m_hi = std::min(m_range.hi, n - 1);
        for (int m = std::max(m_range.lo, 0); m <= m_hi; ++m) {
            Int acc = 0;
            for (int j = 0; j <= 3; ++j)
                acc += coeff(j, n, m) * seq(n + step * j, m);
            ++report.checked;
            if (acc != 0) {
                std::ostringstream os;
                os << "nonzero certificate sum " << acc << " at (n=" << n << ", m=" << m << ")";
                report.fail(os.str());
            }
        }
    }
    return report;
}

CheckReport verify_delta_certificate(const SequenceView& view, Range n_range, Range m_range) {
    return check_order3_certificate(
        "delta-certificate", [](int j, long long n, long long m) { return delta_certificate_coeff(j, n, m); },
        [&view](int n, int m) { return view.delta(n, m); }, -1, n_range, m_range);
}

bool degenerate_identity(const SequenceView& view, int m) {
    if (m < 1)
        throw std::invalid_argument("degenerate_identity: m must be >= 1");
    return 3 * view.delta(4 * m, m) == 2 * view.delta(4 * m - 2, m);
}

CheckReport verify_degenerate_identity(const SequenceView& view, Range m_range) {
    CheckReport report;
    report.name = "degenerate-identity-3:2";
    for (int m = std::max(1, m_range.lo); m <= m_range.hi; ++m) {
        ++report.checked;
        if (!degenerate_identity(view, m))
            report.fail("3*Delta(4m,m) != 2*Delta(4m-2,m) at m=" + std::to_string(m));
    }
    return report;
}

CheckReport verify_g_certificate(const SequenceView& view, Range n_range, Range m_range) {
    CheckReport report = check_order3_certificate(
        "g-certificate", [](int j, long long n, long long m) { return g_certificate_coeff(j, n, m); },
        [&view](int n, int m) { return view.g(n, m); }, +1, n_range, m_range);
    report.name = "g-certificate";
    // specialized rearrangement at n = 4m-2, divided through by m
    for (int m = std::max(1, m_range.lo); m <= m_range.hi; ++m) {
        Int lhs = (3 * m + 1) * view.g(4 * m + 1, m);
        Int rhs = -(12 * m - 7) * view.g(4 * m, m) + (2 * m - 3) * view.g(4 * m - 1, m) +
                  (8 * m - 2) * view.g(4 * m - 2, m);
        ++report.checked;
        if (lhs != rhs)
            report.fail("(3m+1) specialization fails at m=" + std::to_string(m));
    }
    return report;
}

CheckReport verify_4m2_reduction(const SequenceView& view, Range m_range) {
    CheckReport report;
    report.name = "reduction-4m+2";
    for (int m = std::max(1, m_range.lo); m <= m_range.hi; ++m) {
        Int lhs = 4 * (3 * m + 1) * view.delta(4 * m + 1, m) + 2 * m * view.delta(4 * m, m);
        Int rhs = 2 * (4 * m + 1) * view.delta(4 * m - 1, m) + (3 * m + 2) * view.delta(4 * m + 2, m);
        ++report.checked;
        if (lhs != rhs)
            report.fail("identity fails at m=" + std::to_string(m));
    }
    return report;
}

CheckReport verify_boundary_formulas(const SequenceView& view, Range m_range) {
    CheckReport report;
    report.name = "boundary-delta-formulas";
    for (int m = std::max(1, m_range.lo); m <= m_range.hi; ++m) {
        for (int offset = 1; offset <= 5; ++offset) {
            ++report.checked;
            if (view.delta(m + offset, m) != boundary_delta(m, offset))
                report.fail("Delta(m+" + std::to_string(offset) + ", m) mismatch at m=" +
                            std::to_string(m));
        }
    }
    return report;
}

} // namespace hookpart
