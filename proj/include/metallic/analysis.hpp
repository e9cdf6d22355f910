#pragma once

#include <complex>
#include <vector>

#include "metallic/roots.hpp"
#include "metallic/sequences.hpp"

namespace metallic {

/// One consecutive-term ratio g_{n+1}/g_n, exact, plus its distance from
/// the dominant root.
struct RatioPoint {
    int n = 0;
    Rational ratio;           // g_{n+1} / g_n, exact
    double ratio_value = 0;   // floating rendering of the same ratio
    double abs_error = 0;     // |ratio - rho_m|
};

/// Ratios for n = 1 .. count-1 (terms g_0 .. g_count are generated).
/// abs_error is measured against the midpoint of a certified enclosure
/// whose width is kept at least 10x smaller than the smallest error in the
/// window; the enclosure is refined automatically until that holds.
std::vector<RatioPoint> ratio_sequence(const SequenceSpec& spec, int count);

struct ConvergenceReport {
    SequenceSpec spec;
    int count = 0;
    std::vector<RatioPoint> points;
    double fitted_rate = 0;   // geometric decay of abs_error, fitted
    double gap = 0;           // spectral_gap(spec)
    double rate_over_gap = 0;
};

/// Least-squares fit of log(abs_error) over the last half of the ratio
/// window, compared against the spectral gap the root moduli predict.
ConvergenceReport convergence_report(const SequenceSpec& spec, int count);

/// Coefficients c_j with g_n = sum_j c_j * gamma_j^n, solved from the
/// k x k Vandermonde system on the first k terms.
struct BinetDecomposition {
    std::vector<std::complex<double>> roots;
    std::vector<std::complex<double>> coefficients;
    double condition = 0;  // max/min pivot magnitude from the elimination

    /// Re(sum_j c_j * gamma_j^n)
    double reconstruct(int n) const;
};

BinetDecomposition binet_coefficients(const SequenceSpec& spec);

/// Refined triangle inequality on three nonzero complex numbers (sorted by
/// modulus internally):
///   |z1+z2+z3| + (3 - |z1/|z1| + z2/|z2| + z3/|z3||) * |z1|  <=  |z1|+|z2|+|z3|
struct TriangleCheck {
    double lhs = 0;
    double rhs = 0;
    bool holds = false;
};

TriangleCheck triangle_refinement_check(std::complex<double> z1, std::complex<double> z2,
                                        std::complex<double> z3);

/// Segment identity for the k = 3 golden mean: with a = t^2, b = t, c = 1,
/// checks (a+b+c)/a = a/b = b/c = t to 1e-12. Holds exactly when
/// t^3 = t^2 + t + 1, i.e. only at the root.
bool segment_ratio_check(const BigFloat& cubic_golden_root);

}  // namespace metallic
