// The partition statistic A(n,m), its first difference Delta(n,m), and the
// auxiliary sum G(n,m), computed exactly by recurrence and by closed form.
#pragma once

#include "hookpart/triangle.hpp"

namespace hookpart {

/// Builds the triangle of A(n,m) for 1 <= n <= n_max by the 5-term
/// recurrence A(n,m) = A(n-1,m) + A(n-1,m-1) + A(n-2,m) - A(n-2,m-1),
/// with A(1,0) = 1 and every out-of-range value 0.
TriangleTable a_table(int n_max);

/// Closed form A(n,m) = sum_k C(k,m) C(n-1-k, k-m), valid for all
/// integers n, m (empty sum is 0). Stateless; suited to spot queries.
Int a_closed(long long n, long long m);

/// Delta(n,m) = A(n,m) - A(n,m-1), via the closed form.
Int delta(long long n, long long m);

/// Boundary closed forms for Delta(m+offset, m), offset in 1..5:
/// 0, -m, -(m-1), -(m+4)(m-1)/2, -(m^2+m-4). Throws on other offsets
/// or m < 1.
Int boundary_delta(long long m, int offset);

/// G(n,m) = Delta(n,m) + Delta(n-1,m), via the closed form.
Int g_value(long long n, long long m);

/// Table-backed view for grid work: one shared A-triangle, O(1) exact
/// lookups for A, Delta and G. All queries must satisfy n <= n_max of the
/// underlying table; out-of-triangle m is fine (value 0).
class SequenceView {
public:
    explicit SequenceView(int n_max) : table_(a_table(n_max)) {}
    explicit SequenceView(TriangleTable table) : table_(std::move(table)) {}

    int n_max() const { return table_.n_max(); }
    const TriangleTable& table() const { return table_; }

    const Int& a(int n, int m) const { return table_.at(n, m); }
    Int delta(int n, int m) const { return table_.at(n, m) - table_.at(n, m - 1); }
    Int g(int n, int m) const { return delta(n, m) + delta(n - 1, m); }

    /// Triangle of Delta(n,m) for 1 <= n <= n_max, 0 <= m <= n-1.
    TriangleTable delta_table() const;

private:
    TriangleTable table_;
};

} // namespace hookpart
