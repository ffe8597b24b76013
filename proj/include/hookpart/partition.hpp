// Brute-force enumeration of partitions with a given largest hook length,
// and the two statistics whose joint distribution the library studies.
#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hookpart/triangle.hpp"

namespace hookpart {

/// A partition as its weakly decreasing list of parts. The largest hook
/// length is parts[0] + len(parts) - 1 (hook of the top-left cell).
struct Partition {
    std::vector<int> parts;

    int hook() const {
        return parts.empty() ? 0 : parts.front() + static_cast<int>(parts.size()) - 1;
    }
    bool operator==(const Partition&) const = default;
};

/// |H_n| = 2^(n-1), so enumeration is capped to keep runtimes sane.
inline constexpr int kDefaultEnumerationCap = 24;

/// Number of even parts of p.
int count_even_parts(const Partition& p);

/// Number of indices i with parts[i] == parts[i+1].
int count_equal_adjacent_pairs(const Partition& p);

/// Visits every partition with largest hook length n exactly once, in a
/// deterministic order: first part from 1 to n, remaining parts filled
/// recursively in decreasing-first order.
void for_each_hook_partition(int n, const std::function<void(const Partition&)>& visit);

/// All partitions with largest hook length n, in enumeration order.
/// Throws if n < 1 or n exceeds the cap (the message names the cap).
std::vector<Partition> enumerate_hook(int n, int cap = kDefaultEnumerationCap);

/// Tabulates both statistics over H_1..H_n_max by direct enumeration:
/// first table counts by number of even parts, second by number of equal
/// adjacent pairs. Independent of any recurrence.
std::pair<TriangleTable, TriangleTable> oracle_tables(int n_max, int cap = kDefaultEnumerationCap);

} // namespace hookpart
