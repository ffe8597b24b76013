#include "hookpart/polyseq.hpp"

#include <stdexcept>
#include <string>

namespace hookpart {

std::vector<Poly<Int>> f_family(int n_max) {
    if (n_max < 1)
        throw std::invalid_argument("f_family: n_max must be >= 1");
    std::vector<Poly<Int>> fs;
    fs.reserve(static_cast<std::size_t>(n_max));
    fs.push_back(Poly<Int>{Int(1)});
    if (n_max >= 2)
        fs.push_back(Poly<Int>{Int(1), Int(1)});
    const Poly<Int> one_plus_z{Int(1), Int(1)};
    const Poly<Int> one_minus_z{Int(1), Int(-1)};
    for (int n = 3; n <= n_max; ++n)
        fs.push_back(one_plus_z * fs[static_cast<std::size_t>(n - 2)] +
                     one_minus_z * fs[static_cast<std::size_t>(n - 3)]);
    return fs;
}

Poly<Int> f_poly(int n) {
    return f_family(n).back();
}

std::vector<LiftPoly> w_family(int n_max) {
    if (n_max < 0)
        throw std::invalid_argument("w_family: n_max must be >= 0");
    std::vector<LiftPoly> ws;
    ws.reserve(static_cast<std::size_t>(n_max) + 1);
    ws.push_back({0, Poly<Int>{Int(1)}});
    if (n_max >= 1)
        ws.push_back({1, Poly<Int>{Int(2), Int(2)}});
    const Poly<Int> two_z_plus_two{Int(2), Int(2)};
    const Poly<Int> z2_plus_one{Int(1), Int(0), Int(1)};
    for (int n = 2; n <= n_max; ++n)
        ws.push_back({n, two_z_plus_two * ws[static_cast<std::size_t>(n - 1)].poly -
                             z2_plus_one * ws[static_cast<std::size_t>(n - 2)].poly});
    return ws;
}

LiftPoly w_lift(int n) {
    return w_family(n).back();
}

Poly<CycloQ8> mobius_chain(int n) {
    if (n < 0)
        throw std::invalid_argument("mobius_chain: n must be >= 0");
    // coefficients of F_{n+1}(2z+1), a degree-n integer polynomial
    const Poly<Int> g = f_poly(n + 1).compose_linear(Int(2), Int(1));

    const CycloQ8 i = CycloQ8::i();
    const Poly<CycloQ8> numer{i, CycloQ8(1)};  // z + i
    const Poly<CycloQ8> denom{CycloQ8(1), i};  // i z + 1

    // acc = sum_k g_k numer^k denom^(n-k), Horner over numer with the
    // denominator power carried alongside
    Poly<CycloQ8> acc = Poly<CycloQ8>::constant(CycloQ8(g[n]));
    Poly<CycloQ8> denom_pow = Poly<CycloQ8>::constant(CycloQ8(1));
    for (int k = n - 1; k >= 0; --k) {
        denom_pow = denom_pow * denom;
        acc = acc * numer + denom_pow * CycloQ8(g[k]);
    }

    // the absorbed lift factor contributes i^{-n}; together with the
    // rotation zeta^n this is zeta^{-n}, then compress by (sqrt 2)^{-n}
    CycloQ8 scale = CycloQ8::zeta_pow(-n);
    CycloQ8 sqrt2_pow = CycloQ8(1);
    for (int k = 0; k < n; ++k)
        sqrt2_pow = sqrt2_pow * CycloQ8::sqrt2();
    scale = scale * sqrt2_pow.inverse();

    Poly<CycloQ8> w = acc * scale;
    for (int k = 0; k <= w.degree(); ++k)
        if (!w[k].is_rational())
            throw std::domain_error("mobius_chain: non-rational residual coefficient at z^" +
                                    std::to_string(k) + " for n=" + std::to_string(n) + ": " +
                                    w[k].to_string());
    return w;
}

Poly<Rat> mobius_chain_rational(int n) {
    const Poly<CycloQ8> w = mobius_chain(n);
    std::vector<Rat> c;
    c.reserve(static_cast<std::size_t>(w.degree()) + 1);
    for (int k = 0; k <= w.degree(); ++k)
        c.push_back(w[k].as_rational());
    return Poly<Rat>(std::move(c));
}

Poly<Int> shifted_w(int n) {
    if (n < 0)
        throw std::invalid_argument("shifted_w: n must be >= 0");
    Poly<Int> prev{Int(1)};     // V_0
    Poly<Int> cur{Int(0), Int(1)}; // V_1 = z
    if (n == 0)
        return prev;
    const Poly<Int> z{Int(0), Int(1)};
    const Poly<Int> two_minus_z{Int(2), Int(-1)};
    for (int k = 2; k <= n; ++k) {
        Poly<Int> next = z * cur + two_minus_z * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly<Int> shifted_w_composed(int n) {
    if (n < 0)
        throw std::invalid_argument("shifted_w_composed: n must be >= 0");
    return f_poly(n + 1).compose_linear(Int(1), Int(-1));
}

namespace {

template <class R>
std::string coeff_csv_impl(const Poly<R>& p) {
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        out += std::to_string(k);
        out += ',';
        out += p[k].str();
        out += '\n';
    }
    return out;
}

} // namespace

std::string coeff_csv(const Poly<Int>& p) { return coeff_csv_impl(p); }
std::string coeff_csv(const Poly<Rat>& p) { return coeff_csv_impl(p); }

} // namespace hookpart
