// Triangular integer tables indexed by (n, m), 1 <= n, 0 <= m <= n-1.
#pragma once

#include <string>
#include <vector>

#include "hookpart/numeric.hpp"

namespace hookpart {

class TriangleTable {
public:
    TriangleTable() = default;
    explicit TriangleTable(std::vector<std::vector<Int>> rows);

    int n_max() const { return static_cast<int>(rows_.size()); }

    /// Entry (n, m); zero outside the triangle (n < 1, m < 0 or m > n-1).
    /// Rows beyond n_max() are an error.
    const Int& at(int n, int m) const;

    const std::vector<Int>& row(int n) const;

    /// CSV with header "n\m,0,1,...", one row per n, exact decimal entries.
    std::string to_csv() const;

    bool operator==(const TriangleTable&) const = default;

private:
    std::vector<std::vector<Int>> rows_; // rows_[i] is row n = i+1, length i+1
    static const Int zero_;
};

} // namespace hookpart
