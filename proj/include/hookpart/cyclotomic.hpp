// Exact arithmetic in the eighth cyclotomic field Q(zeta), zeta = e^{i pi/4}:
// degree 4 over Q with basis {1, zeta, zeta^2, zeta^3} and zeta^4 = -1.
// The field contains both i = zeta^2 and sqrt(2) = zeta - zeta^3, which is
// what makes it the right home for the lift-transform computations.
#pragma once

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hookpart/numeric.hpp"

namespace hookpart {

class CycloQ8 {
public:
    CycloQ8() : c_{} {}
    CycloQ8(int v) : c_{} { c_[0] = v; } // NOLINT: implicit from integers is intended
    CycloQ8(const Int& v) : c_{} { c_[0] = v; }
    CycloQ8(Rat v) : c_{} { c_[0] = std::move(v); }
    CycloQ8(Rat a0, Rat a1, Rat a2, Rat a3) : c_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

    static CycloQ8 zeta() { return CycloQ8(0, 1, 0, 0); }
    static CycloQ8 i() { return CycloQ8(0, 0, 1, 0); }
    static CycloQ8 sqrt2() { return CycloQ8(0, 1, 0, -1); }

    /// zeta^k for any integer k, reduced via zeta^4 = -1.
    static CycloQ8 zeta_pow(long long k) {
        long long e = ((k % 8) + 8) % 8;
        CycloQ8 r;
        Rat sign = e < 4 ? 1 : -1;
        r.c_[static_cast<std::size_t>(e % 4)] = sign;
        return r;
    }

    const Rat& coord(int k) const { return c_.at(static_cast<std::size_t>(k)); }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

    /// The rational value of a purely rational element; throws otherwise.
    const Rat& as_rational() const {
        if (!is_rational())
            throw std::domain_error("CycloQ8: element is not rational: " + to_string());
        return c_[0];
    }

    CycloQ8 operator+(const CycloQ8& o) const {
        CycloQ8 r;
        for (int k = 0; k < 4; ++k)
            r.c_[k] = c_[k] + o.c_[k];
        return r;
    }

    CycloQ8 operator-(const CycloQ8& o) const {
        CycloQ8 r;
        for (int k = 0; k < 4; ++k)
            r.c_[k] = c_[k] - o.c_[k];
        return r;
    }

    CycloQ8 operator-() const {
        CycloQ8 r;
        for (int k = 0; k < 4; ++k)
            r.c_[k] = -c_[k];
        return r;
    }

    CycloQ8 operator*(const CycloQ8& o) const {
        // convolution with wraparound sign from zeta^4 = -1
        std::array<Rat, 7> full{};
        for (int a = 0; a < 4; ++a) {
            if (c_[a] == 0)
                continue;
            for (int b = 0; b < 4; ++b)
                if (!(o.c_[b] == 0))
                    full[static_cast<std::size_t>(a + b)] += c_[a] * o.c_[b];
        }
        CycloQ8 r;
        for (int k = 0; k < 4; ++k)
            r.c_[k] = full[static_cast<std::size_t>(k)];
        for (int k = 4; k < 7; ++k)
            r.c_[k - 4] -= full[static_cast<std::size_t>(k)];
        return r;
    }

    /// Galois automorphism zeta -> zeta^k, k odd. k = 7 is complex conjugation.
    CycloQ8 galois(int k) const {
        if (k % 2 == 0)
            throw std::invalid_argument("CycloQ8::galois: exponent must be odd");
        CycloQ8 r;
        for (int j = 0; j < 4; ++j) {
            if (c_[j] == 0)
                continue;
            long long e = ((static_cast<long long>(k) * j) % 8 + 8) % 8;
            Rat v = c_[j];
            if (e >= 4) {
                e -= 4;
                v = -v;
            }
            r.c_[static_cast<std::size_t>(e)] += v;
        }
        return r;
    }

    CycloQ8 conj() const { return galois(7); }

    /// Multiplicative inverse via the product of the other three Galois
    /// conjugates: x * g3(x) * g5(x) * g7(x) is the rational field norm.
    CycloQ8 inverse() const {
        if (is_zero())
            throw std::domain_error("CycloQ8: inverse of zero");
        CycloQ8 cof = galois(3) * galois(5) * galois(7);
        CycloQ8 norm = *this * cof;
        // the norm is Galois-invariant, hence rational
        const Rat& n = norm.as_rational();
        CycloQ8 r;
        for (int k = 0; k < 4; ++k)
            r.c_[k] = cof.c_[k] / n;
        return r;
    }

    CycloQ8 operator/(const CycloQ8& o) const { return *this * o.inverse(); }

    bool operator==(const CycloQ8& o) const { return c_ == o.c_; }
    bool operator!=(const CycloQ8& o) const { return !(*this == o); }

    std::string to_string() const {
        std::ostringstream os;
        os << "(" << c_[0] << ", " << c_[1] << "*z8, " << c_[2] << "*z8^2, " << c_[3] << "*z8^3)";
        return os.str();
    }

private:
    std::array<Rat, 4> c_; // value = c0 + c1*zeta + c2*zeta^2 + c3*zeta^3
};

} // namespace hookpart
