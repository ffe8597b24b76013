#include "hookpart/partition.hpp"

#include <stdexcept>
#include <string>

namespace hookpart {

int count_even_parts(const Partition& p) {
    int c = 0;
    for (int v : p.parts)
        if (v % 2 == 0)
            ++c;
    return c;
}

int count_equal_adjacent_pairs(const Partition& p) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < p.parts.size(); ++i)
        if (p.parts[i] == p.parts[i + 1])
            ++c;
    return c;
}

namespace {

void fill_tail(Partition& scratch, std::size_t target_len, int max_part,
               const std::function<void(const Partition&)>& visit) {
    if (scratch.parts.size() == target_len) {
        visit(scratch);
        return;
    }
    for (int v = max_part; v >= 1; --v) {
        scratch.parts.push_back(v);
        fill_tail(scratch, target_len, v, visit);
        scratch.parts.pop_back();
    }
}

void check_enumeration_bounds(int n, int cap) {
    if (n < 1)
        throw std::invalid_argument("hook-length enumeration requires n >= 1, got n=" + std::to_string(n));
    if (n > cap)
        throw std::invalid_argument("enumeration too large: n=" + std::to_string(n) + " exceeds cap " +
                                    std::to_string(cap) + " (|H_n| doubles with every step of n)");
}

} // namespace

void for_each_hook_partition(int n, const std::function<void(const Partition&)>& visit) {
    // first part a forces exactly n + 1 - a parts in total
    Partition scratch;
    scratch.parts.reserve(static_cast<std::size_t>(n));
    for (int a = 1; a <= n; ++a) {
        scratch.parts.assign(1, a);
        fill_tail(scratch, static_cast<std::size_t>(n + 1 - a), a, visit);
    }
}

std::vector<Partition> enumerate_hook(int n, int cap) {
    check_enumeration_bounds(n, cap);
    std::vector<Partition> out;
    out.reserve(n >= 1 && n <= 24 ? (std::size_t{1} << (n - 1)) : 0);
    for_each_hook_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::pair<TriangleTable, TriangleTable> oracle_tables(int n_max, int cap) {
    check_enumeration_bounds(n_max, cap);
    std::vector<std::vector<Int>> by_even, by_pairs;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Int> even_row(static_cast<std::size_t>(n), 0);
        std::vector<Int> pair_row(static_cast<std::size_t>(n), 0);
        for_each_hook_partition(n, [&](const Partition& p) {
            even_row[static_cast<std::size_t>(count_even_parts(p))] += 1;
            pair_row[static_cast<std::size_t>(count_equal_adjacent_pairs(p))] += 1;
        });
        by_even.push_back(std::move(even_row));
        by_pairs.push_back(std::move(pair_row));
    }
    return {TriangleTable(std::move(by_even)), TriangleTable(std::move(by_pairs))};
}

} // namespace hookpart
