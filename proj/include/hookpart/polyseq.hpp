// The generating-polynomial families: F_n with the A-triangle rows as
// coefficients, the real-rooted lift W_n, and the shifted family
// V_n(z) = F_{n+1}(z-1). Also the exact transform chain that carries F_{n+1}
// to W_n inside Q(zeta_8).
#pragma once

#include "hookpart/cyclotomic.hpp"
#include "hookpart/poly.hpp"

namespace hookpart {

/// F_1 = 1, F_2 = 1+z, F_n = (1+z) F_{n-1} + (1-z) F_{n-2}. Coefficient
/// list equals row n of the A-triangle.
Poly<Int> f_poly(int n);

/// F_1..F_n_max in one pass.
std::vector<Poly<Int>> f_family(int n_max);

/// Degree-n lift with leading (and constant) coefficient n+1.
struct LiftPoly {
    int n = 0;
    Poly<Int> poly;
};

/// W_0 = 1, W_1 = 2(z+1), W_n = 2(z+1) W_{n-1} - (z^2+1) W_{n-2}.
LiftPoly w_lift(int n);

/// W_0..W_n_max in one pass.
std::vector<LiftPoly> w_family(int n_max);

/// Evaluates the transform chain symbolically in Q(zeta_8):
/// substitute 2z+1 into F_{n+1}, then the Moebius map (z+i)/(iz+1) as a
/// ratio of linear forms, clear the denominator (iz+1)^n while absorbing
/// the lift factor (z-i)^n through iz+1 = i(z-i), rotate by the power of
/// zeta_8 and compress by (sqrt 2)^n. The result must come out with purely
/// rational coefficients; a non-rational residual coefficient throws.
Poly<CycloQ8> mobius_chain(int n);

/// The chain output as a rational-coefficient polynomial (it must equal
/// w_lift(n) coefficient-wise).
Poly<Rat> mobius_chain_rational(int n);

/// V_n = F_{n+1}(z-1) built from the recurrence
/// V_n = z V_{n-1} + (2-z) V_{n-2}, V_0 = 1, V_1 = z.
Poly<Int> shifted_w(int n);

/// Same family by direct substitution of z-1 into F_{n+1}; the two routes
/// are checked against each other in the tests.
Poly<Int> shifted_w_composed(int n);

/// One CSV line per coefficient: "power,value", exact decimal integers or
/// exact "p/q" rationals.
std::string coeff_csv(const Poly<Int>& p);
std::string coeff_csv(const Poly<Rat>& p);

} // namespace hookpart
