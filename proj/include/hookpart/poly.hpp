// Dense univariate polynomials over an exact coefficient ring. The ring
// needs default construction (zero), +, -, *, == . Trailing zeros are
// trimmed; the zero polynomial has an empty coefficient list and degree -1.
#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace hookpart {

template <class R>
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<R> ascending) : c_(ascending) { trim(); }
    explicit Poly(std::vector<R> ascending) : c_(std::move(ascending)) { trim(); }

    static Poly constant(R v) { return Poly(std::vector<R>{std::move(v)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    /// Coefficient of z^k; zero beyond the degree.
    const R& operator[](int k) const {
        static const R zero{};
        if (k < 0 || k > degree())
            return zero;
        return c_[static_cast<std::size_t>(k)];
    }

    const std::vector<R>& coeffs() const { return c_; }

    const R& leading() const {
        if (is_zero())
            throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    Poly operator+(const Poly& o) const {
        std::vector<R> r(std::max(c_.size(), o.c_.size()), R{});
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            r[i] = r[i] + o.c_[i];
        return Poly(std::move(r));
    }

    Poly operator-() const {
        std::vector<R> r(c_);
        for (auto& v : r)
            v = R{} - v;
        return Poly(std::move(r));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero())
            return Poly();
        std::vector<R> r(c_.size() + o.c_.size() - 1, R{});
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return Poly(std::move(r));
    }

    Poly operator*(const R& s) const {
        std::vector<R> r(c_);
        for (auto& v : r)
            v = v * s;
        return Poly(std::move(r));
    }

    template <class X>
    X evaluate(const X& x) const {
        X acc{};
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + X(c_[i]);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1)
            return Poly();
        std::vector<R> r(c_.size() - 1, R{});
        for (std::size_t k = 1; k < c_.size(); ++k)
            r[k - 1] = c_[k] * R(static_cast<int>(k));
        return Poly(std::move(r));
    }

    /// p(a*z + b) by Horner accumulation; multiplication by a linear
    /// polynomial keeps this O(degree^2).
    Poly compose_linear(const R& a, const R& b) const {
        Poly lin(std::vector<R>{b, a});
        Poly acc;
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * lin + constant(c_[i]);
        return acc;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == R{})
            c_.pop_back();
    }

    std::vector<R> c_;
};

/// Coefficient list reads the same reversed (z^n p(1/z) == p(z)).
template <class R>
bool is_palindromic(const Poly<R>& p) {
    const auto& c = p.coeffs();
    for (std::size_t i = 0, j = c.size(); i < j; ++i)
        if (!(c[i] == c[--j]))
            return false;
    return true;
}

/// Coefficient-wise ring conversion (e.g. integer polynomials viewed over
/// the rationals or over a larger field).
template <class S, class R>
Poly<S> convert_poly(const Poly<R>& p) {
    std::vector<S> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs())
        c.push_back(S(v));
    return Poly<S>(std::move(c));
}

} // namespace hookpart
