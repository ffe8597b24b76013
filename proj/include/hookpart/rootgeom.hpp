// Geometric certification of the computed zero sets: circle membership for
// the F_n zeros, exact negative-simple-real certification and interlacing
// for the lift family, the exact limit-of-zeros computation for two-term
// polynomial recurrences, and the empirical angular-gap density statistics.
#pragma once

#include <optional>

#include "hookpart/polyseq.hpp"
#include "hookpart/report.hpp"
#include "hookpart/rootfind.hpp"

namespace hookpart {

struct CircleCertification {
    std::string source;
    double max_radius_deviation = 0.0;  // max | |z-1| - 2 |
    double max_halfplane_excess = 0.0;  // max (Re z - 1)
    double max_residual = 0.0;
    bool pass = false;
    std::vector<std::string> offenders;
};

/// Every point must satisfy | |z-1| - 2 | <= tol_circle and
/// Re(z) <= 1 + tol_circle.
CircleCertification certify_circle(const ZeroSet& zs, double tol_circle = 1e-8);

/// Exact rational interval with a certified sign change of some polynomial.
struct RootInterval {
    Rat lo;
    Rat hi;
};

/// Isolating intervals for all real roots of p, seeded by the approximate
/// root locations: each interval carries an exact sign change, intervals
/// are pairwise disjoint, and there are exactly degree(p) of them, which
/// together certify that every root of p is real and simple. Returns
/// nullopt when certification fails.
std::optional<std::vector<RootInterval>> isolate_real_roots(const Poly<Int>& p,
                                                            const std::vector<double>& approx);

struct NegativeSimpleCertification {
    std::string source;
    bool pass = false;
    double min_separation = 0.0; // between adjacent computed roots
    std::vector<std::string> notes;
};

/// Certifies in exact arithmetic that w.poly has exactly n negative simple
/// real zeros, using zs only as a hint for the isolating intervals.
NegativeSimpleCertification certify_negative_simple(const LiftPoly& w, const ZeroSet& zs);

/// Strict interlacing of the lift pair (n-1, n): between consecutive roots
/// of W_n lies exactly one root of W_{n-1}. Exact; vacuously true at n = 1.
bool certify_interlacing(int n);

/// Negative-simple plus interlacing for the whole family up to n_max,
/// computing each zero set once.
CheckReport verify_lift_roots(int n_max, const FindOpts& opts = {});

/// An exact number p + q*sqrt(radicand) (real) or p + i*q*sqrt(radicand)
/// (imaginary_axis_surd true); radicand >= 0, and q = 0 encodes a plain
/// rational.
struct SurdNumber {
    Rat p;
    Rat q;
    Rat radicand;
    bool imaginary_axis_surd = false;

    bool is_rational() const { return q == 0; }
    std::complex<double> approx() const;
    std::string to_string() const;
};

struct LimitCandidate {
    SurdNumber value;
    bool passes_filter = false; // Re((a z + b) conj((2-a) z - b)) < 0
};

struct LimitZeroResult {
    Rat discriminant; // c^2 + a(bc - ad), negative in the supported case
    std::vector<LimitCandidate> candidates;
    /// Candidates passing the strict-inequality filter.
    std::vector<SurdNumber> isolated;
    /// Arc endpoints (-ab - 2c +- 2 sqrt(discriminant)) / a^2 as
    /// endpoint_re +- i * endpoint_im_coeff * sqrt(-discriminant).
    Rat endpoint_re;
    Rat endpoint_im_coeff;
    /// The arc passes through -b/a.
    Rat through_point;
};

/// Limits of zeros for the recurrence P_n = (az+b) P_{n-1} + (cz+d) P_{n-2}
/// with P_0 = 1, P_1 = z, in the case discriminant < 0. All arithmetic is
/// exact; a sqrt(discriminant-related) factor is carried symbolically.
/// Throws: invalid_argument when a = 0, c = 0 or the sequence is the
/// geometric one; domain_error when the discriminant is >= 0.
LimitZeroResult wz_limits(const Rat& a, const Rat& b, const Rat& c, const Rat& d);

struct DensityStats {
    int n_max = 0;
    std::vector<int> cutoffs;      // generating-polynomial index, from 4 up
    std::vector<double> max_gap;   // largest angular gap on [pi/2, 3pi/2]
    std::vector<double> min_angle; // extreme accumulated angles per cutoff;
    std::vector<double> max_angle; // they creep towards pi/2 and 3pi/2
    double gap_at(int cutoff) const;
};

/// Accumulates the zeros of F_2..F_n_max, projects them on the angle of
/// the circle |z-1| = 2 (branch [0, 2pi)) and tracks the largest gap on
/// the closed left-half arc as the cutoff grows.
DensityStats arc_density(int n_max, const FindOpts& opts = {});

/// Warm-start helper for walking the F family upward: the midpoint of the
/// widest angular hole the given points leave on the left-half circle.
std::complex<double> widest_gap_seed(const std::vector<std::complex<double>>& pts);

} // namespace hookpart
