// Exact arithmetic aliases shared across the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hookpart {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the combinatorial convention:
/// zero unless 0 <= b <= a.
inline Int binomial(long long a, long long b) {
    if (b < 0 || b > a)
        return 0;
    if (b > a - b)
        b = a - b;
    Int r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i; // exact at every step: r is C(a-b+i, i)
    }
    return r;
}

} // namespace hookpart
