#include "hookpart/rootfind.hpp"

#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hookpart/format.hpp"

namespace hookpart {

namespace {

namespace mp = boost::multiprecision;
using F128 = mp::number<mp::cpp_bin_float<128, mp::digit_base_2>, mp::et_off>;
using F256 = mp::number<mp::cpp_bin_float<256, mp::digit_base_2>, mp::et_off>;
using F512 = mp::number<mp::cpp_bin_float<512, mp::digit_base_2>, mp::et_off>;

// minimal complex type usable with multiprecision reals
template <class Real>
struct Cx {
    Real re{};
    Real im{};
};

template <class Real>
Cx<Real> operator+(const Cx<Real>& a, const Cx<Real>& b) {
    return {a.re + b.re, a.im + b.im};
}
template <class Real>
Cx<Real> operator-(const Cx<Real>& a, const Cx<Real>& b) {
    return {a.re - b.re, a.im - b.im};
}
template <class Real>
Cx<Real> operator*(const Cx<Real>& a, const Cx<Real>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class Real>
Cx<Real> operator/(const Cx<Real>& a, const Cx<Real>& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
template <class Real>
Real abs_cx(const Cx<Real>& a) {
    using std::sqrt;
    return sqrt(a.re * a.re + a.im * a.im);
}

double to_double(double v) { return v; }
template <class Real>
double to_double(const Real& v) {
    return v.template convert_to<double>();
}

template <class Real>
Real real_from_int(const Int& x) {
    return Real(x);
}
template <>
double real_from_int<double>(const Int& x) {
    return x.convert_to<double>();
}

// log2 of |x| without overflowing double conversion
double log2_int(const Int& x) {
    if (x == 0)
        return -std::numeric_limits<double>::infinity();
    Int a = abs(x);
    const unsigned bits = msb(a); // floor(log2 a)
    double top;
    if (bits <= 52) {
        top = a.convert_to<double>();
        return std::log2(top);
    }
    Int shifted = a >> (bits - 52);
    return static_cast<double>(bits - 52) + std::log2(shifted.convert_to<double>());
}

// Start radii from the Newton polygon of the coefficients: on each edge of
// the upper convex hull of (i, log2|c_i|) sit (run of the edge) roots of
// magnitude about 2^(-slope). This keeps the start configuration sane even
// when the root moduli span many decades.
std::vector<std::complex<double>> initial_circle(const std::vector<Int>& c) {
    const int d = static_cast<int>(c.size()) - 1;
    std::vector<std::pair<double, double>> pts; // (index, log2|coeff|)
    for (int i = 0; i <= d; ++i)
        if (!(c[static_cast<std::size_t>(i)] == 0))
            pts.emplace_back(i, log2_int(c[static_cast<std::size_t>(i)]));

    std::vector<std::pair<double, double>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull.back();
            // slopes must strictly decrease along the upper hull
            if ((b.second - a.second) * (p.first - b.first) <=
                (p.second - b.second) * (b.first - a.first))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }

    std::vector<std::complex<double>> z;
    z.reserve(static_cast<std::size_t>(d));
    const double two_pi = 6.283185307179586;
    int j = 0;
    auto push_ring = [&](int count, double radius) {
        for (int t = 0; t < count; ++t, ++j) {
            // constant angular offset breaks conjugate symmetry of the
            // start set; the radius stagger breaks rotational ties
            double ang = two_pi * j / d + 0.3 + 0.41 / d;
            double rad = radius * (1.0 + 0.012 * (j % 7));
            z.push_back(std::polar(rad, ang));
        }
    };
    const int zero_roots = static_cast<int>(hull.front().first);
    if (zero_roots > 0)
        push_ring(zero_roots, 1e-8);
    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        const double run = hull[e + 1].first - hull[e].first;
        const double slope = (hull[e + 1].second - hull[e].second) / run;
        const double radius = std::clamp(std::exp2(-slope), 1e-8, 1e8);
        push_ring(static_cast<int>(run), radius);
    }
    while (static_cast<int>(z.size()) < d)
        push_ring(1, 1.0);
    return z;
}

// One precision rung of Aberth-Ehrlich. Points come in and go out as
// doubles; the refinement happens in Real. A point retires either when its
// correction reaches the Real epsilon scale or when the corrections stop
// shrinking (the roundoff floor of this rung); the caller's residual test
// decides whether the rung actually sufficed.
template <class Real>
void aberth_rung(const std::vector<Int>& coeffs, std::vector<std::complex<double>>& pts,
                 int max_sweeps) {
    const int d = static_cast<int>(coeffs.size()) - 1;
    std::vector<Cx<Real>> c(coeffs.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        c[k] = {real_from_int<Real>(coeffs[k]), Real(0)};

    std::vector<Cx<Real>> z(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k)
        z[static_cast<std::size_t>(k)] = {Real(pts[static_cast<std::size_t>(k)].real()),
                                          Real(pts[static_cast<std::size_t>(k)].imag())};

    const Real eps = std::numeric_limits<Real>::epsilon();
    const Real lock_scale = eps * 8;
    // After kProbe flat sweeps, a point that stayed inside a few step
    // lengths of where the flat stretch began is jittering at this rung's
    // roundoff floor and retires; one that moved on is still migrating
    // (e.g. towards the one root no seed covered) and keeps its budget.
    constexpr int kProbe = 5;
    constexpr int kStallHardCap = 40;

    std::vector<char> active(static_cast<std::size_t>(d), 1);
    std::vector<Real> best_w(static_cast<std::size_t>(d), Real(0));
    std::vector<char> has_best(static_cast<std::size_t>(d), 0);
    std::vector<int> stall(static_cast<std::size_t>(d), 0);
    std::vector<Cx<Real>> anchor(static_cast<std::size_t>(d));
    int n_active = d;
    auto fresh = initial_circle(coeffs);
    std::size_t reseed_at = 0;

    for (int sweep = 0; sweep < max_sweeps && n_active > 0; ++sweep) {
        for (int k = 0; k < d; ++k) {
            if (!active[static_cast<std::size_t>(k)])
                continue;
            const Cx<Real> zk = z[static_cast<std::size_t>(k)];
            // p and p' by Horner
            Cx<Real> p{}, dp{};
            for (std::size_t idx = coeffs.size(); idx-- > 0;) {
                dp = dp * zk + p;
                p = p * zk + c[idx];
            }
            if (p.re == 0 && p.im == 0) {
                active[static_cast<std::size_t>(k)] = 0;
                --n_active;
                continue;
            }
            if (dp.re == 0 && dp.im == 0) {
                // sitting on a critical point: nudge and retry next sweep
                z[static_cast<std::size_t>(k)].re += Real(1e-3) * (abs_cx(zk) + Real(1));
                continue;
            }
            Cx<Real> newton = p / dp;
            Cx<Real> repulsion{};
            Real min_gap2 = Real(0);
            bool has_gap = false;
            for (int j = 0; j < d; ++j) {
                if (j == k)
                    continue;
                Cx<Real> diff = zk - z[static_cast<std::size_t>(j)];
                if (diff.re == 0 && diff.im == 0)
                    diff.re = eps * (abs_cx(zk) + Real(1));
                const Real g2 = diff.re * diff.re + diff.im * diff.im;
                if (!has_gap || g2 < min_gap2) {
                    min_gap2 = g2;
                    has_gap = true;
                }
                repulsion = repulsion + Cx<Real>{diff.re / g2, -diff.im / g2};
            }
            Cx<Real> denom = Cx<Real>{Real(1), Real(0)} - newton * repulsion;
            Cx<Real> w = (denom.re == 0 && denom.im == 0) ? newton : newton / denom;
            Cx<Real> znew = zk - w;
            if (!(std::isfinite(to_double(znew.re)) && std::isfinite(to_double(znew.im)))) {
                // diverged: restart from an unused circle position
                auto seed = fresh[reseed_at++ % fresh.size()];
                z[static_cast<std::size_t>(k)] = {Real(seed.real()), Real(seed.imag())};
                has_best[static_cast<std::size_t>(k)] = 0;
                stall[static_cast<std::size_t>(k)] = 0;
                continue;
            }
            z[static_cast<std::size_t>(k)] = znew;
            const Real aw = abs_cx(w);
            if (aw <= lock_scale * (abs_cx(zk) + Real(1e-3))) {
                active[static_cast<std::size_t>(k)] = 0;
                --n_active;
                continue;
            }
            if (has_best[static_cast<std::size_t>(k)] &&
                aw >= best_w[static_cast<std::size_t>(k)] * Real(0.9)) {
                const int s = ++stall[static_cast<std::size_t>(k)];
                if (s == 1)
                    anchor[static_cast<std::size_t>(k)] = znew;
                if (s >= kProbe) {
                    const Real moved = abs_cx(znew - anchor[static_cast<std::size_t>(k)]);
                    const bool parked = moved <= aw * Real(3) &&
                                        (!has_gap || aw * aw * Real(4096) <= min_gap2);
                    if (parked || s >= kStallHardCap) {
                        active[static_cast<std::size_t>(k)] = 0;
                        --n_active;
                    } else if (s % kProbe == 0) {
                        anchor[static_cast<std::size_t>(k)] = znew;
                    }
                }
            } else {
                stall[static_cast<std::size_t>(k)] = 0;
            }
            if (!has_best[static_cast<std::size_t>(k)] || aw < best_w[static_cast<std::size_t>(k)]) {
                best_w[static_cast<std::size_t>(k)] = aw;
                has_best[static_cast<std::size_t>(k)] = 1;
            }
        }
    }

    for (int k = 0; k < d; ++k)
        pts[static_cast<std::size_t>(k)] = {to_double(z[static_cast<std::size_t>(k)].re),
                                            to_double(z[static_cast<std::size_t>(k)].im)};
}

// residual estimate at the rounded points, evaluated in Real
template <class Real>
double residual_estimate(const std::vector<Int>& coeffs, std::complex<double> pt) {
    if (!(std::isfinite(pt.real()) && std::isfinite(pt.imag())))
        return std::numeric_limits<double>::infinity();
    Cx<Real> zk{Real(pt.real()), Real(pt.imag())};
    Cx<Real> p{}, dp{};
    for (std::size_t idx = coeffs.size(); idx-- > 0;) {
        dp = dp * zk + p;
        p = p * zk + Cx<Real>{real_from_int<Real>(coeffs[idx]), Real(0)};
    }
    Real pa = abs_cx(p), da = abs_cx(dp);
    if (da == 0)
        return pa == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    return to_double(Real(pa / da));
}

std::vector<std::complex<double>> companion_eigenvalues(const std::vector<Int>& coeffs) {
    const int d = static_cast<int>(coeffs.size()) - 1;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
    for (int i = 0; i + 1 < d; ++i)
        m(i + 1, i) = 1.0;
    for (int i = 0; i < d; ++i) {
        Rat ratio(coeffs[static_cast<std::size_t>(i)], coeffs[static_cast<std::size_t>(d)]);
        m(i, d - 1) = -ratio.convert_to<double>();
    }
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return out;
}

// Real-axis snap and exact conjugate pairing for real-coefficient input.
void symmetrize(std::vector<std::complex<double>>& pts) {
    constexpr double snap = 1e-9;
    for (const auto& z : pts)
        if (!(std::isfinite(z.real()) && std::isfinite(z.imag())))
            return;
    std::vector<std::complex<double>> reals, uppers, lowers;
    for (auto& z : pts) {
        if (std::abs(z.imag()) <= snap * std::max(1.0, std::abs(z.real())))
            reals.emplace_back(z.real(), 0.0);
        else if (z.imag() > 0)
            uppers.push_back(z);
        else
            lowers.push_back(z);
    }
    if (uppers.size() == lowers.size()) {
        pts.clear();
        pts.insert(pts.end(), reals.begin(), reals.end());
        std::vector<char> used(lowers.size(), 0);
        for (const auto& u : uppers) {
            std::size_t best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < lowers.size(); ++j) {
                if (used[j])
                    continue;
                double dd = std::norm(std::conj(lowers[j]) - u);
                if (dd < best_d) {
                    best_d = dd;
                    best = j;
                }
            }
            used[best] = 1;
            std::complex<double> avg = 0.5 * (u + std::conj(lowers[best]));
            pts.push_back(avg);
            pts.push_back(std::conj(avg));
        }
    }
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
}

struct DyadicPoint {
    Int x; // z = (x + i y) / 2^s
    Int y;
    unsigned s;
};

DyadicPoint to_dyadic(std::complex<double> z) {
    const Rat qr(z.real());
    const Rat qi(z.imag());
    const Int dr = denominator(qr); // powers of two
    const Int di = denominator(qi);
    const unsigned sr = dr == 1 ? 0 : msb(dr);
    const unsigned si = di == 1 ? 0 : msb(di);
    const unsigned s = std::max(sr, si);
    DyadicPoint p;
    p.s = s;
    p.x = numerator(qr) << (s - sr);
    p.y = numerator(qi) << (s - si);
    return p;
}

// |p(z)|^2 as A / 2^(2 s deg) with exact integer A
Int horner_abs2_scaled(const std::vector<Int>& coeffs, const DyadicPoint& z) {
    const int d = static_cast<int>(coeffs.size()) - 1;
    Int ar = coeffs[static_cast<std::size_t>(d)];
    Int ai = 0;
    for (int j = d - 1; j >= 0; --j) {
        Int nr = ar * z.x - ai * z.y;
        Int ni = ar * z.y + ai * z.x;
        nr += coeffs[static_cast<std::size_t>(j)] << (z.s * static_cast<unsigned>(d - j));
        ar = std::move(nr);
        ai = std::move(ni);
    }
    return ar * ar + ai * ai;
}

std::vector<Int> derivative_coeffs(const std::vector<Int>& coeffs) {
    std::vector<Int> dc;
    dc.reserve(coeffs.size() > 0 ? coeffs.size() - 1 : 0);
    for (std::size_t k = 1; k < coeffs.size(); ++k)
        dc.push_back(coeffs[k] * static_cast<long long>(k));
    return dc;
}

} // namespace

bool residual_within_tol_exact(const Poly<Int>& p, std::complex<double> z, const Rat& tol) {
    if (!(std::isfinite(z.real()) && std::isfinite(z.imag())))
        return false;
    const DyadicPoint dz = to_dyadic(z);
    const Int a = horner_abs2_scaled(p.coeffs(), dz);             // |p|^2 * 2^(2 s d)
    const Int b = horner_abs2_scaled(derivative_coeffs(p.coeffs()), dz); // |p'|^2 * 2^(2 s (d-1))
    if (b == 0)
        return a == 0;
    // residual^2 = a / (b * 2^(2s));  compare with tol^2
    const Int tn = numerator(tol), td = denominator(tol);
    return a * td * td <= ((b * tn * tn) << (2 * dz.s));
}

double exact_residual(const Poly<Int>& p, std::complex<double> z) {
    if (!(std::isfinite(z.real()) && std::isfinite(z.imag())))
        return std::numeric_limits<double>::infinity();
    const DyadicPoint dz = to_dyadic(z);
    const Int a = horner_abs2_scaled(p.coeffs(), dz);
    const Int b = horner_abs2_scaled(derivative_coeffs(p.coeffs()), dz);
    if (b == 0)
        return a == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    Rat r2(a, b << (2 * dz.s));
    return std::sqrt(r2.convert_to<double>());
}

double ZeroSet::max_residual() const {
    double m = 0.0;
    for (double r : residuals)
        m = std::max(m, r);
    return m;
}

std::string ZeroSet::to_csv(int label) const {
    std::string out;
    for (std::size_t k = 0; k < points.size(); ++k) {
        out += std::to_string(label);
        out += ',';
        out += format_double(points[k].real());
        out += ',';
        out += format_double(points[k].imag());
        out += ',';
        out += format_double(residuals[k], 3);
        out += '\n';
    }
    return out;
}

namespace {

ZeroSet find_roots_impl(const Poly<Int>& p, const std::string& name,
                        std::vector<std::complex<double>> seeds, const FindOpts& opts) {
    const int d = p.degree();
    if (d < 1)
        throw std::invalid_argument("find_roots: " + name + " must have degree >= 1");
    if (!(opts.tol > 0))
        throw std::invalid_argument("find_roots: tolerance must be positive");
    const std::vector<Int>& coeffs = p.coeffs();
    const bool warm_seeded = !seeds.empty();

    if (seeds.size() > static_cast<std::size_t>(d))
        seeds.resize(static_cast<std::size_t>(d));
    if (seeds.size() < static_cast<std::size_t>(d)) {
        auto circle = initial_circle(coeffs);
        seeds.insert(seeds.end(), circle.begin() + static_cast<std::ptrdiff_t>(seeds.size()),
                     circle.end());
    }
    for (auto& s : seeds)
        if (!(std::isfinite(s.real()) && std::isfinite(s.imag())))
            s = std::complex<double>(0.0, 0.0);

    const bool exact_path = d <= opts.exact_certification_degree_cap;
    const Rat tol_exact = Rat(opts.tol);
    bool companion_tried = false;

    auto run = [&](int which, std::vector<std::complex<double>>& io) {
        switch (which) {
        case 0: aberth_rung<double>(coeffs, io, opts.max_sweeps); break;
        case 1: aberth_rung<F128>(coeffs, io, opts.max_sweeps); break;
        case 2: aberth_rung<F256>(coeffs, io, opts.max_sweeps); break;
        default: aberth_rung<F512>(coeffs, io, opts.max_sweeps); break;
        }
    };
    // Residual estimates run one precision rung above the solve, so that
    // evaluation noise at the solve precision cannot fake a pass.
    auto estimate = [&](int solve_rung, std::complex<double> pt) {
        switch (solve_rung) {
        case 0: return residual_estimate<F128>(coeffs, pt);
        case 1: return residual_estimate<F256>(coeffs, pt);
        default: return residual_estimate<F512>(coeffs, pt);
        }
    };

    // with warm seeds from a neighbouring family member, skip rungs whose
    // precision the degree has already outgrown
    int start_rung = 0;
    if (opts.allow_escalation && warm_seeded) {
        if (d > 150)
            start_rung = 2;
        else if (d > 90)
            start_rung = 1;
    }

    const int n_rungs = opts.allow_escalation ? 4 : 1;
    for (int rung = start_rung; rung < n_rungs; ++rung) {
        run(rung, seeds);

        auto evaluate = [&](const std::vector<std::complex<double>>& pts,
                            std::vector<double>& residuals) {
            residuals.assign(pts.size(), 0.0);
            bool all_within = true;
            for (std::size_t k = 0; k < pts.size(); ++k) {
                if (exact_path) {
                    residuals[k] = exact_residual(p, pts[k]);
                    if (!residual_within_tol_exact(p, pts[k], tol_exact))
                        all_within = false;
                } else {
                    residuals[k] = estimate(rung, pts[k]);
                    if (!(residuals[k] <= opts.tol))
                        all_within = false;
                }
            }
            return all_within;
        };

        std::vector<std::complex<double>> pts = seeds;
        symmetrize(pts);
        std::vector<double> residuals;
        bool all_within = evaluate(pts, residuals);

        if (!all_within && opts.allow_companion_fallback && !companion_tried && d <= 500) {
            companion_tried = true;
            auto retry = companion_eigenvalues(coeffs);
            run(rung, retry);
            symmetrize(retry);
            std::vector<double> retry_residuals;
            if (evaluate(retry, retry_residuals)) {
                pts = std::move(retry);
                residuals = std::move(retry_residuals);
                all_within = true;
            }
        }

        if (all_within) {
            ZeroSet zs;
            zs.source = name;
            zs.degree = d;
            zs.points = std::move(pts);
            zs.residuals = std::move(residuals);
            zs.certified = exact_path;
            zs.tol = opts.tol;
            return zs;
        }
        seeds = pts; // warm-start the next rung
        for (auto& s : seeds)
            if (!(std::isfinite(s.real()) && std::isfinite(s.imag())))
                s = std::complex<double>(0.0, 0.0);
    }

    std::ostringstream os;
    os << "find_roots: " << name << " did not converge to residual <= " << opts.tol
       << " within the precision ladder (degree " << d << ")";
    throw std::runtime_error(os.str());
}

} // namespace

ZeroSet find_roots(const Poly<Int>& p, const std::string& name, const FindOpts& opts) {
    return find_roots_impl(p, name, {}, opts);
}

ZeroSet find_roots(const Poly<Rat>& p, const std::string& name, const FindOpts& opts) {
    Int lcm_den = 1;
    for (const Rat& q : p.coeffs())
        lcm_den = lcm(lcm_den, denominator(q));
    std::vector<Int> cleared;
    cleared.reserve(p.coeffs().size());
    for (const Rat& q : p.coeffs())
        cleared.push_back(numerator(q) * (lcm_den / denominator(q)));
    return find_roots_impl(Poly<Int>(std::move(cleared)), name, {}, opts);
}

ZeroSet find_roots_warm(const Poly<Int>& p, const std::string& name,
                        const std::vector<std::complex<double>>& warm_start, const FindOpts& opts) {
    return find_roots_impl(p, name, warm_start, opts);
}

} // namespace hookpart
