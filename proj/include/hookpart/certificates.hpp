// Machine verification of the two order-3 recurrence certificates for
// Delta(n,m) and G(n,m), plus the degenerate identities they imply.
// Coefficients are evaluated exactly; a certificate holds only if the
// linear combination is exactly zero at every grid point.
#pragma once

#include <cstdint>
#include <functional>

#include "hookpart/report.hpp"
#include "hookpart/sequence.hpp"

namespace hookpart {

/// Inclusive integer range.
struct Range {
    int lo;
    int hi;
};

/// Coefficient d_j(n,m), j = 0..3, of the certificate
///   sum_j d_j(n,m) Delta(n-j, m) = 0.
long long delta_certificate_coeff(int j, long long n, long long m);

/// Coefficient l_j(n,m), j = 0..3, of the certificate
///   sum_j l_j(n,m) G(n+j, m) = 0.
long long g_certificate_coeff(int j, long long n, long long m);

/// Generic order-3 certificate checker over a rectangular grid, exposed so
/// tests can aim it at deliberately broken coefficient sets. `step` is -1
/// for backward-indexed certificates (S(n-j)) and +1 for forward (S(n+j)).
CheckReport check_order3_certificate(const std::string& name,
                                     const std::function<long long(int, long long, long long)>& coeff,
                                     const std::function<Int(int, int)>& seq, int step,
                                     Range n_range, Range m_range);

/// sum_j d_j(n,m) Delta(n-j,m) == 0 on the grid (m additionally clipped to
/// 0 <= m <= n-1). Violations are reported, not thrown.
CheckReport verify_delta_certificate(const SequenceView& view, Range n_range, Range m_range);

/// 3*Delta(4m, m) == 2*Delta(4m-2, m).
bool degenerate_identity(const SequenceView& view, int m);
CheckReport verify_degenerate_identity(const SequenceView& view, Range m_range);

/// Both the general l_j identity on the grid and, for every m in m_range,
/// the specialized form (3m+1) G(4m+1,m) =
///   -(12m-7) G(4m,m) + (2m-3) G(4m-1,m) + (8m-2) G(4m-2,m).
CheckReport verify_g_certificate(const SequenceView& view, Range n_range, Range m_range);

/// 4(3m+1) Delta(4m+1) + 2m Delta(4m) == 2(4m+1) Delta(4m-1) + (3m+2) Delta(4m+2),
/// all at second argument m.
CheckReport verify_4m2_reduction(const SequenceView& view, Range m_range);

/// Delta(m+offset, m) equals its boundary closed form for offset = 1..5.
CheckReport verify_boundary_formulas(const SequenceView& view, Range m_range);

} // namespace hookpart
