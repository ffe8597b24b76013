#include "hookpart/rootgeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hookpart/format.hpp"

namespace hookpart {

CircleCertification certify_circle(const ZeroSet& zs, double tol_circle) {
    CircleCertification cert;
    cert.source = zs.source;
    cert.max_residual = zs.max_residual();
    cert.pass = true;
    for (const auto& z : zs.points) {
        const double radius_dev = std::abs(std::abs(z - std::complex<double>(1.0, 0.0)) - 2.0);
        const double excess = z.real() - 1.0;
        cert.max_radius_deviation = std::max(cert.max_radius_deviation, radius_dev);
        cert.max_halfplane_excess = std::max(cert.max_halfplane_excess, excess);
        if (radius_dev > tol_circle || excess > tol_circle) {
            cert.pass = false;
            cert.offenders.push_back("(" + format_double(z.real()) + ", " + format_double(z.imag()) +
                                     ") radius_dev=" + format_double(radius_dev, 3));
        }
    }
    return cert;
}

namespace {

// sign of p(t) at an exact rational t = u/v, v > 0
int sign_at(const Poly<Int>& p, const Rat& t) {
    const Int u = numerator(t);
    const Int v = denominator(t);
    const int d = p.degree();
    if (d < 0)
        return 0;
    Int acc = p[d];
    Int vpow = 1;
    for (int j = d - 1; j >= 0; --j) {
        vpow *= v;
        acc = acc * u + p[j] * vpow;
    }
    return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

Rat rat_from_double(double x) { return Rat(x); }

} // namespace

std::optional<std::vector<RootInterval>> isolate_real_roots(const Poly<Int>& p,
                                                            const std::vector<double>& approx) {
    const int d = p.degree();
    if (static_cast<int>(approx.size()) != d)
        return std::nullopt;
    std::vector<double> sorted(approx);
    std::sort(sorted.begin(), sorted.end());

    std::vector<RootInterval> out;
    out.reserve(static_cast<std::size_t>(d));
    for (double r : sorted) {
        const double scale = std::max(1.0, std::abs(r));
        bool found = false;
        for (double w = scale * 0x1p-30; w <= scale * 0x1p-18; w *= 4.0) {
            RootInterval iv{rat_from_double(r - w), rat_from_double(r + w)};
            const int slo = sign_at(p, iv.lo);
            const int shi = sign_at(p, iv.hi);
            if (slo == 0 || shi == 0) {
                // an endpoint hit the root exactly: collapse to a point interval
                out.push_back(slo == 0 ? RootInterval{iv.lo, iv.lo} : RootInterval{iv.hi, iv.hi});
                found = true;
                break;
            }
            if (slo != shi) {
                out.push_back(std::move(iv));
                found = true;
                break;
            }
        }
        if (!found)
            return std::nullopt;
    }
    for (std::size_t k = 0; k + 1 < out.size(); ++k)
        if (!(out[k].hi < out[k + 1].lo))
            return std::nullopt;
    return out;
}

NegativeSimpleCertification certify_negative_simple(const LiftPoly& w, const ZeroSet& zs) {
    NegativeSimpleCertification cert;
    cert.source = zs.source;
    cert.pass = false;

    if (zs.degree != w.poly.degree() || static_cast<int>(zs.points.size()) != w.poly.degree()) {
        cert.notes.push_back("zero set does not carry degree(W) points");
        return cert;
    }
    std::vector<double> reals;
    reals.reserve(zs.points.size());
    for (const auto& z : zs.points) {
        if (z.imag() != 0.0) {
            cert.notes.push_back("non-real point survived the snap: (" + format_double(z.real()) +
                                 ", " + format_double(z.imag()) + ")");
            return cert;
        }
        reals.push_back(z.real());
    }
    std::sort(reals.begin(), reals.end());
    cert.min_separation = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < reals.size(); ++k)
        cert.min_separation = std::min(cert.min_separation, reals[k + 1] - reals[k]);
    if (reals.empty())
        cert.min_separation = 0.0;

    auto intervals = isolate_real_roots(w.poly, reals);
    if (!intervals) {
        cert.notes.push_back("exact isolation failed");
        return cert;
    }
    for (const auto& iv : *intervals) {
        if (!(iv.hi < 0)) {
            cert.notes.push_back("isolating interval reaches the nonnegative axis");
            return cert;
        }
    }
    // degree(p) disjoint sign-change intervals, all below zero: every root
    // of W_n is real, negative and simple.
    cert.pass = true;
    return cert;
}

// Midpoint of the widest angular hole the points leave on the left-half
// circle; the best guess for where the next family member grows its
// extra root.
std::complex<double> widest_gap_seed(const std::vector<std::complex<double>>& pts) {
    constexpr double half_pi = 1.5707963267948966;
    constexpr double pi = 3.141592653589793;
    std::vector<double> th;
    th.reserve(pts.size() + 2);
    th.push_back(half_pi);
    for (const auto& z : pts) {
        double t = std::atan2(z.imag(), z.real() - 1.0);
        if (t < 0)
            t += 2 * pi;
        th.push_back(t);
    }
    th.push_back(3 * half_pi);
    std::sort(th.begin(), th.end());
    double best_mid = pi, best_gap = -1.0;
    for (std::size_t k = 0; k + 1 < th.size(); ++k) {
        const double gap = th[k + 1] - th[k];
        if (gap > best_gap) {
            best_gap = gap;
            best_mid = 0.5 * (th[k] + th[k + 1]);
        }
    }
    return std::complex<double>(1.0, 0.0) + std::polar(2.0, best_mid);
}

namespace {

std::vector<double> real_points(const ZeroSet& zs) {
    std::vector<double> out;
    out.reserve(zs.points.size());
    for (const auto& z : zs.points)
        out.push_back(z.real());
    std::sort(out.begin(), out.end());
    return out;
}

bool interlaces_exactly(const Poly<Int>& outer, const Poly<Int>& inner,
                        const std::vector<double>& outer_roots,
                        const std::vector<double>& inner_roots) {
    auto outer_iv = isolate_real_roots(outer, outer_roots);
    auto inner_iv = isolate_real_roots(inner, inner_roots);
    if (!outer_iv || !inner_iv)
        return false;
    if (inner_iv->size() + 1 != outer_iv->size())
        return false;
    for (std::size_t k = 0; k < inner_iv->size(); ++k) {
        if (!((*outer_iv)[k].hi < (*inner_iv)[k].lo))
            return false;
        if (!((*inner_iv)[k].hi < (*outer_iv)[k + 1].lo))
            return false;
    }
    return true;
}

} // namespace

bool certify_interlacing(int n) {
    if (n < 1)
        throw std::invalid_argument("certify_interlacing: n must be >= 1");
    if (n == 1)
        return true; // W_0 is constant, nothing to interlace
    auto family = w_family(n);
    const auto& wn = family[static_cast<std::size_t>(n)];
    const auto& wn1 = family[static_cast<std::size_t>(n - 1)];
    ZeroSet zn = find_roots(wn.poly, "W_" + std::to_string(n));
    ZeroSet zn1 = find_roots(wn1.poly, "W_" + std::to_string(n - 1));
    return interlaces_exactly(wn.poly, wn1.poly, real_points(zn), real_points(zn1));
}

CheckReport verify_lift_roots(int n_max, const FindOpts& opts) {
    CheckReport report;
    report.name = "lift-roots-negative-simple-interlacing";
    auto family = w_family(n_max);
    std::vector<double> prev_roots;
    Poly<Int> prev_poly;
    std::vector<std::complex<double>> warm;
    for (int n = 1; n <= n_max; ++n) {
        const auto& w = family[static_cast<std::size_t>(n)];
        ZeroSet zs = find_roots_warm(w.poly, "W_" + std::to_string(n), warm, opts);
        ++report.checked;
        auto cert = certify_negative_simple(w, zs);
        if (!cert.pass)
            report.fail("W_" + std::to_string(n) + ": " +
                        (cert.notes.empty() ? "not certified" : cert.notes.front()));
        std::vector<double> roots = real_points(zs);
        if (n >= 2) {
            ++report.checked;
            if (!interlaces_exactly(w.poly, prev_poly, roots, prev_roots))
                report.fail("interlacing fails for pair (" + std::to_string(n - 1) + ", " +
                            std::to_string(n) + ")");
        }
        // the missing nth seed gets padded from the start configuration
        warm = zs.points;
        prev_roots = std::move(roots);
        prev_poly = w.poly;
    }
    return report;
}

std::complex<double> SurdNumber::approx() const {
    const double root = std::sqrt(radicand.convert_to<double>());
    const double pp = p.convert_to<double>();
    const double qq = q.convert_to<double>();
    if (imaginary_axis_surd)
        return {pp, qq * root};
    return {pp + qq * root, 0.0};
}

std::string SurdNumber::to_string() const {
    std::ostringstream os;
    os << p;
    if (!(q == 0)) {
        os << (imaginary_axis_surd ? " + i*" : " + ") << q << "*sqrt(" << radicand << ")";
    }
    return os.str();
}

namespace {

int sign_rat(const Rat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

// sign of alpha + beta * sqrt(D), D >= 0, exact
int sign_with_surd(const Rat& alpha, const Rat& beta, const Rat& D) {
    if (beta == 0 || D == 0)
        return sign_rat(alpha);
    const int sb = sign_rat(beta);
    const int sa = sign_rat(alpha);
    if (sa == 0)
        return sb;
    if (sa == sb)
        return sa;
    // opposite signs: compare alpha^2 against beta^2 D
    const Rat a2 = alpha * alpha;
    const Rat b2d = beta * beta * D;
    if (a2 == b2d)
        return 0;
    return a2 > b2d ? sa : sb;
}

// Re((a z + b) conj((2-a) z - b)) for z = x + iy with x = p + q sqrt(D)
// (real surd) or x = p, y^2 = q^2 D (imaginary surd). Result as a sign.
int filter_sign(const Rat& a, const Rat& b, const SurdNumber& z) {
    const Rat two_minus_a = 2 - a;
    if (z.imaginary_axis_surd || z.is_rational()) {
        const Rat x = z.p;
        const Rat y2 = z.imaginary_axis_surd ? z.q * z.q * z.radicand : Rat(0);
        const Rat value = (a * x + b) * (two_minus_a * x - b) + a * two_minus_a * y2;
        return sign_rat(value);
    }
    // real surd x = p + q sqrt(D): (ax+b)((2-a)x-b) = alpha + beta sqrt(D)
    const Rat u = a * z.p + b;
    const Rat v = two_minus_a * z.p - b;
    const Rat alpha = u * v + a * two_minus_a * z.q * z.q * z.radicand;
    const Rat beta = z.q * (u * two_minus_a + v * a);
    return sign_with_surd(alpha, beta, z.radicand);
}

} // namespace

LimitZeroResult wz_limits(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    if (a == 0 || c == 0)
        throw std::invalid_argument("wz_limits: requires a != 0 and c != 0");
    if (a == 1 && b + c == 0 && d == 0)
        throw std::invalid_argument("wz_limits: the geometric sequence z^n is excluded");

    LimitZeroResult res;
    res.discriminant = c * c + a * (b * c - a * d);
    if (!(res.discriminant < 0))
        throw std::domain_error("wz_limits: discriminant " +
                                res.discriminant.str() +
                                " is >= 0; only the negative-discriminant case is implemented");

    // candidate equation (1-a) z^2 - (b+c) z - d = 0
    const Rat qa = 1 - a, qb = -(b + c), qc = -d;
    if (qa == 0) {
        if (qb != 0) {
            SurdNumber z;
            z.p = -qc / qb;
            z.q = 0;
            z.radicand = 0;
            res.candidates.push_back({z, false});
        } else if (qc != 0) {
            // no candidate at all
        } else {
            throw std::domain_error("wz_limits: degenerate candidate equation 0 = 0");
        }
    } else {
        const Rat disc = qb * qb - 4 * qa * qc;
        const Rat base = -qb / (2 * qa);
        if (disc == 0) {
            SurdNumber z;
            z.p = base;
            z.q = 0;
            z.radicand = 0;
            res.candidates.push_back({z, false});
        } else {
            const Rat coeff = 1 / (2 * qa);
            const bool complex_pair = disc < 0;
            const Rat rad = complex_pair ? Rat(-disc) : disc;
            for (int sgn : {+1, -1}) {
                SurdNumber z;
                z.p = base;
                z.q = sgn * coeff;
                z.radicand = rad;
                z.imaginary_axis_surd = complex_pair;
                res.candidates.push_back({z, false});
            }
        }
    }

    for (auto& cand : res.candidates) {
        cand.passes_filter = filter_sign(a, b, cand.value) < 0;
        if (cand.passes_filter)
            res.isolated.push_back(cand.value);
    }

    res.endpoint_re = (-a * b - 2 * c) / (a * a);
    res.endpoint_im_coeff = 2 / (a * a);
    res.through_point = -b / a;
    return res;
}

double DensityStats::gap_at(int cutoff) const {
    for (std::size_t k = 0; k < cutoffs.size(); ++k)
        if (cutoffs[k] == cutoff)
            return max_gap[k];
    throw std::out_of_range("DensityStats: cutoff " + std::to_string(cutoff) + " not sampled");
}

DensityStats arc_density(int n_max, const FindOpts& opts) {
    if (n_max < 4)
        throw std::invalid_argument("arc_density: n_max must be >= 4");
    constexpr double half_pi = 1.5707963267948966;
    constexpr double pi = 3.141592653589793;

    DensityStats stats;
    stats.n_max = n_max;
    auto family = f_family(n_max);

    std::vector<double> angles; // sorted accumulation
    std::vector<std::complex<double>> warm;
    for (int n = 2; n <= n_max; ++n) {
        const auto& f = family[static_cast<std::size_t>(n - 1)];
        ZeroSet zs = find_roots_warm(f, "F_" + std::to_string(n), warm, opts);

        std::vector<double> fresh;
        fresh.reserve(zs.points.size());
        for (const auto& z : zs.points) {
            double theta = std::atan2(z.imag(), z.real() - 1.0);
            if (theta < 0)
                theta += 2 * pi;
            fresh.push_back(theta);
        }
        std::sort(fresh.begin(), fresh.end());
        const std::size_t mid = angles.size();
        angles.insert(angles.end(), fresh.begin(), fresh.end());
        std::inplace_merge(angles.begin(), angles.begin() + static_cast<std::ptrdiff_t>(mid),
                           angles.end());

        if (n >= 4) {
            double gap = angles.front() - half_pi;
            for (std::size_t k = 0; k + 1 < angles.size(); ++k)
                gap = std::max(gap, angles[k + 1] - angles[k]);
            gap = std::max(gap, 3 * half_pi - angles.back());
            stats.cutoffs.push_back(n);
            stats.max_gap.push_back(gap);
            stats.min_angle.push_back(angles.front());
            stats.max_angle.push_back(angles.back());
        }

        warm = zs.points;
        warm.push_back(widest_gap_seed(warm));
    }
    return stats;
}

} // namespace hookpart
