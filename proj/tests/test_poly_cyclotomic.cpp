#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hookpart/cyclotomic.hpp"
#include "hookpart/poly.hpp"
#include "hookpart/polyseq.hpp"

using namespace hookpart;

namespace {
// small deterministic generator for property-style cases
struct Lcg {
    unsigned long long s = 0x2545F4914F6CDD1DULL;
    int next(int lo, int hi) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<int>((s >> 33) % static_cast<unsigned>(hi - lo + 1));
    }
};
} // namespace

TEST_CASE("polynomial basics") {
    Poly<Int> p{Int(1), Int(1)};  // 1 + z
    Poly<Int> q{Int(1), Int(-1)}; // 1 - z
    CHECK((p * q) == Poly<Int>{Int(1), Int(0), Int(-1)});
    CHECK(p.degree() == 1);
    CHECK(Poly<Int>().degree() == -1);
    CHECK(Poly<Int>{Int(0), Int(0)}.is_zero()); // trailing zeros trimmed
    CHECK((p - p).is_zero());
    CHECK(p[0] == 1);
    CHECK(p[7] == 0);
    CHECK_THROWS_AS(Poly<Int>().leading(), std::domain_error);
}

TEST_CASE("evaluation and derivative") {
    Poly<Int> p{Int(2), Int(-3), Int(1)}; // 2 - 3z + z^2
    CHECK(p.evaluate(Int(5)) == 2 - 15 + 25);
    CHECK(p.derivative() == Poly<Int>{Int(-3), Int(2)});
    CHECK(Poly<Int>{Int(7)}.derivative().is_zero());
}

TEST_CASE("linear composition") {
    Poly<Int> p{Int(1), Int(0), Int(1)}; // 1 + z^2
    // p(2z+1) = 1 + (2z+1)^2 = 2 + 4z + 4z^2
    CHECK(p.compose_linear(Int(2), Int(1)) == Poly<Int>{Int(2), Int(4), Int(4)});
    // p(z-1) = 1 + (z-1)^2 = 2 - 2z + z^2
    CHECK(p.compose_linear(Int(1), Int(-1)) == Poly<Int>{Int(2), Int(-2), Int(1)});
}

TEST_CASE("product evaluation is evaluation of products") {
    Lcg rng;
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Int> a, b;
        for (int i = rng.next(0, 6); i-- > 0;)
            a.push_back(rng.next(-9, 9));
        for (int i = rng.next(0, 6); i-- > 0;)
            b.push_back(rng.next(-9, 9));
        Poly<Int> p(a), q(b);
        Int x = rng.next(-5, 5);
        CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
        CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
    }
}

TEST_CASE("palindromicity") {
    CHECK(is_palindromic(Poly<Int>{Int(3), Int(8), Int(3)}));
    CHECK(is_palindromic(Poly<Int>{Int(1), Int(1)}));
    CHECK(is_palindromic(Poly<Int>{Int(2), Int(1), Int(2)}));
    CHECK_FALSE(is_palindromic(Poly<Int>{Int(2), Int(1), Int(1)}));
    CHECK(is_palindromic(Poly<Int>()));
    // row 6 read as a polynomial is not palindromic
    CHECK_FALSE(is_palindromic(f_poly(6)));
    CHECK(is_palindromic(Poly<Int>{Int(2), Int(1), Int(1)} * Poly<Int>{Int(1), Int(1), Int(2)}));
}

TEST_CASE("eighth cyclotomic constants") {
    const CycloQ8 z = CycloQ8::zeta();
    const CycloQ8 i = CycloQ8::i();
    const CycloQ8 r2 = CycloQ8::sqrt2();
    CHECK(i * i == CycloQ8(-1));
    CHECK(r2 * r2 == CycloQ8(2));
    CHECK(z * z == i);
    CHECK(z * z * z * z == CycloQ8(-1));
    CHECK(CycloQ8::zeta_pow(8) == CycloQ8(1));
    CHECK(CycloQ8::zeta_pow(-1) == z * z * z * CycloQ8(-1)); // zeta^-1 = -zeta^3
    CHECK(CycloQ8::zeta_pow(-1) * z == CycloQ8(1));
    CHECK(r2 == z + CycloQ8::zeta_pow(-1));
}

TEST_CASE("conjugation is the order-two field automorphism fixing rationals") {
    const CycloQ8 x(Rat(1, 2), Rat(-3), Rat(2, 7), Rat(5));
    const CycloQ8 y(Rat(2), Rat(1, 3), Rat(0), Rat(-1, 2));
    CHECK(x.conj().conj() == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK(CycloQ8(Rat(7, 3)).conj() == CycloQ8(Rat(7, 3)));
    CHECK(CycloQ8::i().conj() == CycloQ8(0) - CycloQ8::i());
    CHECK(CycloQ8::sqrt2().conj() == CycloQ8::sqrt2());
    CHECK_THROWS_AS(x.galois(2), std::invalid_argument);
}

TEST_CASE("every nonzero element has an exact inverse") {
    Lcg rng;
    for (int trial = 0; trial < 100; ++trial) {
        CycloQ8 x(Rat(rng.next(-20, 20), rng.next(1, 9)), Rat(rng.next(-20, 20), rng.next(1, 9)),
                  Rat(rng.next(-20, 20), rng.next(1, 9)), Rat(rng.next(-20, 20), rng.next(1, 9)));
        if (x.is_zero())
            continue;
        CHECK(x * x.inverse() == CycloQ8(1));
        CHECK(x / x == CycloQ8(1));
    }
    CHECK_THROWS_AS(CycloQ8(0).inverse(), std::domain_error);
}

TEST_CASE("rationality detection") {
    CHECK(CycloQ8(Rat(5, 3)).is_rational());
    CHECK(CycloQ8(Rat(5, 3)).as_rational() == Rat(5, 3));
    CHECK_FALSE(CycloQ8::zeta().is_rational());
    CHECK_THROWS_AS(CycloQ8::zeta().as_rational(), std::domain_error);
}

TEST_CASE("coefficient CSV export") {
    CHECK(coeff_csv(Poly<Int>{Int(3), Int(-8), Int(3)}) == "0,3\n1,-8\n2,3\n");
    CHECK(coeff_csv(Poly<Rat>{Rat(1, 2), Rat(-4)}) == "0,1/2\n1,-4\n");
}
