#include "hookpart/triangle.hpp"

#include <sstream>
#include <stdexcept>

namespace hookpart {

const Int TriangleTable::zero_ = 0;

TriangleTable::TriangleTable(std::vector<std::vector<Int>> rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].size() != i + 1)
            throw std::invalid_argument("TriangleTable: row " + std::to_string(i + 1) +
                                        " must have exactly " + std::to_string(i + 1) + " entries");
}

const Int& TriangleTable::at(int n, int m) const {
    if (n < 1 || m < 0 || m > n - 1)
        return zero_;
    if (n > n_max())
        throw std::out_of_range("TriangleTable: row " + std::to_string(n) + " not computed (n_max " +
                                std::to_string(n_max()) + ")");
    return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(m)];
}

const std::vector<Int>& TriangleTable::row(int n) const {
    if (n < 1 || n > n_max())
        throw std::out_of_range("TriangleTable: row " + std::to_string(n) + " out of range");
    return rows_[static_cast<std::size_t>(n - 1)];
}

std::string TriangleTable::to_csv() const {
    std::ostringstream out;
    out << "n\\m";
    for (int m = 0; m < n_max(); ++m)
        out << ',' << m;
    out << '\n';
    for (int n = 1; n <= n_max(); ++n) {
        out << n;
        for (const Int& v : rows_[static_cast<std::size_t>(n - 1)])
            out << ',' << v;
        out << '\n';
    }
    return out.str();
}

} // namespace hookpart
