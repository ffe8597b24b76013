// Complex root finding for exact-coefficient polynomials.
//
// The solver is Aberth-Ehrlich simultaneous iteration started from a
// perturbed circle. Working precision escalates through a fixed ladder
// (double, then 128/256/512-bit binary floats) until the roots, rounded to
// double, pass the residual test; the monomial-basis conditioning of the
// families handled here grows exponentially with the degree, so double
// precision alone stops being enough around degree 40. A companion-matrix
// eigenvalue solve serves as fallback initialization when an iteration
// stalls. Residuals |p(z)|/|p'(z)| at the returned points are certified in
// exact integer arithmetic up to a configurable degree cap.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "hookpart/poly.hpp"
#include "hookpart/numeric.hpp"

namespace hookpart {

struct ZeroSet {
    std::string source;                       // which polynomial these zeros belong to
    int degree = 0;
    std::vector<std::complex<double>> points; // sorted by (re, im); conjugate-closed
    std::vector<double> residuals;            // |p(z)|/|p'(z)| per point
    bool certified = false;                   // residuals verified in exact arithmetic
    double tol = 0.0;

    double max_residual() const;

    /// Lines "<label>,<re>,<im>,<residual>", no header.
    std::string to_csv(int label) const;
};

struct FindOpts {
    double tol = 1e-12;                  // residual target at the double-rounded points
    int max_sweeps = 600;                // per precision rung
    bool allow_escalation = true;        // walk the precision ladder
    bool allow_companion_fallback = true;
    int exact_certification_degree_cap = 80; // exact residual check up to this degree
};

/// All complex roots of p (degree >= 1), multiplicity counted. Throws on
/// non-convergence, naming the polynomial.
ZeroSet find_roots(const Poly<Int>& p, const std::string& name, const FindOpts& opts = {});
ZeroSet find_roots(const Poly<Rat>& p, const std::string& name, const FindOpts& opts = {});

/// Same, but seeds the iteration with warm-start points (typically the
/// roots of a neighbouring polynomial in a family). Missing seeds are
/// filled from the initial circle.
ZeroSet find_roots_warm(const Poly<Int>& p, const std::string& name,
                        const std::vector<std::complex<double>>& warm_start,
                        const FindOpts& opts = {});

/// Exact |p(z)|/|p'(z)|^2-comparison: true iff the residual at z is <= tol,
/// decided entirely in integer arithmetic (z is taken at its exact dyadic
/// value). Exposed for tests.
bool residual_within_tol_exact(const Poly<Int>& p, std::complex<double> z, const Rat& tol);

/// The residual |p(z)|/|p'(z)| as a double, computed exactly and rounded.
double exact_residual(const Poly<Int>& p, std::complex<double> z);

} // namespace hookpart
