#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hookpart/rootgeom.hpp"
#include "hookpart/svg.hpp"

using namespace hookpart;

TEST_CASE("small zero sets sit on the circle") {
    for (int n : {3, 4, 7, 12}) {
        ZeroSet zs = find_roots(f_poly(n), "F_" + std::to_string(n));
        CircleCertification cert = certify_circle(zs);
        CHECK(cert.pass);
        CHECK(cert.max_radius_deviation <= 1e-12);
        CHECK(cert.max_halfplane_excess <= 1.0 + 1e-12);
    }
}

TEST_CASE("circle certification flags an off-circle point") {
    ZeroSet zs;
    zs.source = "bogus";
    zs.degree = 1;
    zs.points = {{0.5, 0.5}};
    zs.residuals = {0.0};
    CircleCertification cert = certify_circle(zs);
    CHECK_FALSE(cert.pass);
    REQUIRE(cert.offenders.size() == 1);
}

TEST_CASE("exact isolation of lift roots") {
    LiftPoly w3 = w_lift(3);
    ZeroSet zs = find_roots(w3.poly, "W_3");
    std::vector<double> approx;
    for (const auto& z : zs.points)
        approx.push_back(z.real());
    auto intervals = isolate_real_roots(w3.poly, approx);
    REQUIRE(intervals.has_value());
    REQUIRE(intervals->size() == 3);
    for (std::size_t k = 0; k + 1 < intervals->size(); ++k)
        CHECK((*intervals)[k].hi < (*intervals)[k + 1].lo);
    for (const auto& iv : *intervals)
        CHECK(iv.hi < 0);
    // wrong number of hints is rejected
    CHECK_FALSE(isolate_real_roots(w3.poly, {-1.0}).has_value());
}

TEST_CASE("negative simple certification") {
    for (int n : {1, 2, 5, 9}) {
        LiftPoly w = w_lift(n);
        ZeroSet zs = find_roots(w.poly, "W_" + std::to_string(n));
        auto cert = certify_negative_simple(w, zs);
        CHECK(cert.pass);
    }
    // a zero set with a genuinely complex point cannot be certified
    LiftPoly w2 = w_lift(2);
    ZeroSet fake;
    fake.source = "fake";
    fake.degree = 2;
    fake.points = {{-1.0, 0.5}, {-1.0, -0.5}};
    fake.residuals = {0.0, 0.0};
    CHECK_FALSE(certify_negative_simple(w2, fake).pass);
}

TEST_CASE("interlacing of consecutive lifts") {
    CHECK(certify_interlacing(1)); // vacuous: W_0 has no roots
    // explicit n=2 case: (-4-sqrt7)/3 < -1 < (-4+sqrt7)/3
    CHECK(certify_interlacing(2));
    for (int n = 3; n <= 25; ++n)
        CHECK(certify_interlacing(n));
    CHECK_THROWS_AS(certify_interlacing(0), std::invalid_argument);
}

TEST_CASE("family walk certifies roots and interlacing together") {
    CHECK(verify_lift_roots(25).pass());
}

TEST_CASE("limit of zeros for the shifted family") {
    LimitZeroResult res = wz_limits(1, 0, -1, 2);
    CHECK(res.discriminant == -1);
    REQUIRE(res.candidates.size() == 1);
    // the single candidate z = 2 fails the filter: Re(2 * conj(2)) = 4 > 0
    CHECK(res.candidates[0].value.is_rational());
    CHECK(res.candidates[0].value.p == 2);
    CHECK_FALSE(res.candidates[0].passes_filter);
    CHECK(res.isolated.empty());
    // endpoints 2 +- 2i, through the origin
    CHECK(res.endpoint_re == 2);
    CHECK(res.endpoint_im_coeff == 2);
    CHECK(res.through_point == 0);
    // unit shift left: the circle |z-1| = 2 with poles 1 +- 2i
    CHECK(res.endpoint_re - 1 == 1);
    // deterministic
    LimitZeroResult again = wz_limits(1, 0, -1, 2);
    CHECK(again.discriminant == res.discriminant);
    CHECK(again.endpoint_re == res.endpoint_re);
}

TEST_CASE("limit candidates passing the filter are kept") {
    // a = 3, b = 1, c = -3, d = 1: candidates (1 +- i)/2, both inside
    LimitZeroResult res = wz_limits(3, 1, -3, 1);
    CHECK(res.discriminant == -9);
    REQUIRE(res.candidates.size() == 2);
    CHECK(res.candidates[0].passes_filter);
    CHECK(res.candidates[1].passes_filter);
    REQUIRE(res.isolated.size() == 2);
    CHECK(res.isolated[0].p == Rat(1, 2));
    CHECK(res.isolated[0].imaginary_axis_surd);
    // q^2 * radicand == 1/4, the squared imaginary part
    CHECK(res.isolated[0].q * res.isolated[0].q * res.isolated[0].radicand == Rat(1, 4));
    CHECK(res.endpoint_re == Rat(1, 3));
    CHECK(res.endpoint_im_coeff == Rat(2, 9));
    CHECK(res.through_point == Rat(-1, 3));
}

TEST_CASE("limit candidates on the boundary of the filter are excluded") {
    // a = 2, b = 0: the second filter factor vanishes identically, so the
    // strict inequality fails for both candidates (1 +- i sqrt3)/2
    LimitZeroResult res = wz_limits(2, 0, -1, 1);
    CHECK(res.discriminant == -3);
    REQUIRE(res.candidates.size() == 2);
    CHECK(res.isolated.empty());
    CHECK(res.endpoint_re == Rat(1, 2));
    CHECK(res.endpoint_im_coeff == Rat(1, 2));
}

TEST_CASE("unsupported and invalid limit inputs") {
    CHECK_THROWS_AS(wz_limits(0, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(wz_limits(1, 1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(wz_limits(1, 5, -5, 0), std::invalid_argument); // geometric z^n
    CHECK_THROWS_AS(wz_limits(1, 0, 1, -1), std::domain_error);     // discriminant 2
    CHECK_THROWS_AS(wz_limits(2, 0, 2, 1), std::domain_error);      // discriminant 0
}

TEST_CASE("surd formatting and approximation") {
    SurdNumber s;
    s.p = Rat(1, 2);
    s.q = Rat(1, 2);
    s.radicand = 3;
    s.imaginary_axis_surd = true;
    auto a = s.approx();
    CHECK(a.real() == doctest::Approx(0.5));
    CHECK(a.imag() == doctest::Approx(std::sqrt(3.0) / 2));
    CHECK(s.to_string() == "1/2 + i*1/2*sqrt(3)");
}

TEST_CASE("angular gap statistics shrink with the cutoff") {
    FindOpts opts;
    opts.tol = 1e-9;
    opts.exact_certification_degree_cap = 0;
    DensityStats stats = arc_density(40, opts);
    REQUIRE(stats.cutoffs.front() == 4);
    REQUIRE(stats.cutoffs.back() == 40);
    for (std::size_t k = 0; k + 1 < stats.max_gap.size(); ++k)
        CHECK(stats.max_gap[k + 1] <= stats.max_gap[k] + 1e-12);
    CHECK(stats.gap_at(40) < stats.gap_at(10));
    CHECK_THROWS_AS(stats.gap_at(3), std::out_of_range);
    CHECK_THROWS_AS(arc_density(3), std::invalid_argument);

    // the extreme accumulated angles creep out towards the poles 1 +- 2i
    constexpr double half_pi = 1.5707963267948966;
    CHECK(stats.min_angle.back() < stats.min_angle.front());
    CHECK(stats.max_angle.back() > stats.max_angle.front());
    CHECK(stats.min_angle.back() - half_pi < 0.12);
    CHECK(3 * half_pi - stats.max_angle.back() < 0.12);
}

TEST_CASE("gap seed lands in the widest hole") {
    // no points at all: the hole is the whole left arc, midpoint angle pi
    auto seed = widest_gap_seed({});
    CHECK(seed.real() == doctest::Approx(-1.0));
    CHECK(seed.imag() == doctest::Approx(0.0));
}

TEST_CASE("svg rendering contains the reference geometry") {
    ZeroSet zs = find_roots(f_poly(6), "F_6");
    std::string svg = render_roots_svg({zs});
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("circle") != std::string::npos);
    CHECK(svg.find("1+2i") != std::string::npos);
    CHECK(svg.find("1-2i") != std::string::npos);
    // five root dots plus the reference circle
    std::size_t count = 0;
    for (std::size_t at = svg.find("<circle"); at != std::string::npos;
         at = svg.find("<circle", at + 1))
        ++count;
    CHECK(count == 6);
}
