#include "hookpart/sequence.hpp"

#include <stdexcept>
#include <string>

namespace hookpart {

TriangleTable a_table(int n_max) {
    if (n_max < 1)
        throw std::invalid_argument("a_table: n_max must be >= 1");
    std::vector<std::vector<Int>> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    rows.push_back({Int(1)}); // A(1,0) = 1
    auto get = [&](int n, int m) -> Int {
        if (n < 1 || m < 0 || m > n - 1)
            return 0;
        return rows[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m)];
    };
    for (int n = 2; n <= n_max; ++n) {
        std::vector<Int> row(static_cast<std::size_t>(n));
        for (int m = 0; m < n; ++m)
            row[static_cast<std::size_t>(m)] =
                get(n - 1, m) + get(n - 1, m - 1) + get(n - 2, m) - get(n - 2, m - 1);
        rows.push_back(std::move(row));
    }
    return TriangleTable(std::move(rows));
}

Int a_closed(long long n, long long m) {
    if (m < 0)
        return 0;
    Int total = 0;
    // C(k,m) C(n-1-k, k-m) vanishes unless m <= k and 2k <= n-1+m
    for (long long k = m; 2 * k <= n - 1 + m; ++k)
        total += binomial(k, m) * binomial(n - 1 - k, k - m);
    return total;
}

Int delta(long long n, long long m) {
    return a_closed(n, m) - a_closed(n, m - 1);
}

Int boundary_delta(long long m, int offset) {
    if (m < 1)
        throw std::invalid_argument("boundary_delta: m must be >= 1");
    Int mm = m;
    switch (offset) {
    case 1: return 0;
    case 2: return -mm;
    case 3: return -(mm - 1);
    case 4: return -(mm + 4) * (mm - 1) / 2;
    case 5: return -(mm * mm + mm - 4);
    default:
        throw std::invalid_argument("boundary_delta: offset must be in 1..5, got " +
                                    std::to_string(offset));
    }
}

Int g_value(long long n, long long m) {
    return delta(n, m) + delta(n - 1, m);
}

TriangleTable SequenceView::delta_table() const {
    std::vector<std::vector<Int>> rows;
    rows.reserve(static_cast<std::size_t>(n_max()));
    for (int n = 1; n <= n_max(); ++n) {
        std::vector<Int> row(static_cast<std::size_t>(n));
        for (int m = 0; m < n; ++m)
            row[static_cast<std::size_t>(m)] = delta(n, m);
        rows.push_back(std::move(row));
    }
    return TriangleTable(std::move(rows));
}

} // namespace hookpart
