#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "metallic/charpoly.hpp"

namespace metallic {

/// Certified rational interval around a real root: the polynomial changes
/// sign between lo and hi, and both endpoint signs were computed exactly.
struct RealRootEnclosure {
    Rational lo;
    Rational hi;
    IntPolynomial poly;
    int sign_lo = 0;  // exact sign of poly at lo, always -1 here
    int sign_hi = 0;  // exact sign of poly at hi, always +1 here

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo < x && x < hi; }
};

/// Bisection enclosure of the dominant root of p_m, started from [m, m+1]
/// (sign change certified there) and narrowed until width <= 2^-precision_bits.
/// Every sign decision is an exact rational evaluation, so the certificate
/// cannot be wrong by rounding.
RealRootEnclosure dominant_root(const SequenceSpec& spec, int precision_bits);

/// Continue bisecting an enclosure until its width is <= max_width.
RealRootEnclosure refine(RealRootEnclosure e, const Rational& max_width);

/// (m + sqrt(m^2 + 4)) / 2, the quadratic (k = 2) mean.
BigFloat quadratic_closed_form(int m);

/// Real Cardano solution of x^3 - m*x^2 - x - 1 = 0 via the depressed
/// cubic. The discriminant encountered here always selects the single-real-
/// root branch; that is checked at runtime and violation is an error.
BigFloat cubic_closed_form(int m);

/// All k roots as floating approximations. Sorted dominant root first,
/// then by descending modulus, imaginary part ascending among ties.
struct ComplexRootSet {
    std::vector<std::complex<double>> roots;
    std::vector<double> residuals;  // |p(root)| per root
    int dominant_index = 0;         // index of the real root approximating rho_m
};

/// Simultaneous iteration did not converge; per-root residuals attached.
struct RootConvergenceError : std::runtime_error {
    std::vector<double> residuals;
    explicit RootConvergenceError(std::string msg, std::vector<double> res)
        : std::runtime_error(std::move(msg)), residuals(std::move(res)) {}
};

/// Aberth-Ehrlich simultaneous root finding on a real-coefficient
/// polynomial (ascending coefficients, leading nonzero). Initial guesses
/// sit on the Cauchy-bound circle of radius 1 + max |c_i / c_k|.
std::vector<std::complex<double>> aberth_roots(const std::vector<double>& ascending,
                                               double step_tol = 1e-13, int max_iter = 500);

/// Roots of metallic_charpoly(spec); each residual must satisfy
/// |p(root)| <= tol * sum_i |c_i| |root|^i or the call fails.
ComplexRootSet all_roots(const SequenceSpec& spec, double tol = 1e-10);

/// max_{j != dominant} |gamma_j| / rho_m, in (0, 1); the geometric rate
/// that drives ratio convergence.
double spectral_gap(const SequenceSpec& spec);

}  // namespace metallic
