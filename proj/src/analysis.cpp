#include "metallic/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace metallic {

namespace {

// Enclosure whose width is <= |target - root| / 10, so that measuring
// |target - midpoint| in place of |target - root| is honest.
RealRootEnclosure enclosure_for(const SequenceSpec& spec, const Rational& target) {
    const int start_bits = 64;
    const int max_bits = 1 << 16;
    RealRootEnclosure e = dominant_root(spec, start_bits);
    for (int bits = start_bits; bits <= max_bits; bits *= 2) {
        Rational err = abs(target - e.midpoint());
        if (err > 10 * e.width()) return e;
        Rational narrower = e.width() / pow_int(2, static_cast<unsigned>(bits));
        e = refine(std::move(e), narrower);
    }
    throw std::runtime_error("ratio_sequence: enclosure refinement exceeded the precision cap");
}

}  // namespace

std::vector<RatioPoint> ratio_sequence(const SequenceSpec& spec, int count) {
    spec.validate();
    if (count < 3) throw std::invalid_argument("ratio_sequence: count must be >= 3");

    TermVector g = recurrence_terms(spec, count + 1);
    // the last ratio is the closest to the root; one enclosure good enough
    // for it is good enough for the whole window
    Rational last{g[count], g[count - 1]};
    RealRootEnclosure enc = enclosure_for(spec, last);
    Rational mid = enc.midpoint();

    std::vector<RatioPoint> points;
    points.reserve(count - 1);
    for (int n = 1; n < count; ++n) {
        RatioPoint pt;
        pt.n = n;
        pt.ratio = Rational{g[n + 1], g[n]};
        pt.ratio_value = to_double(pt.ratio);
        pt.abs_error = to_double(Rational(abs(pt.ratio - mid)));
        points.push_back(std::move(pt));
    }
    return points;
}

ConvergenceReport convergence_report(const SequenceSpec& spec, int count) {
    if (count < 10) throw std::invalid_argument("convergence_report: count must be >= 10");

    ConvergenceReport rep;
    rep.spec = spec;
    rep.count = count;
    rep.points = ratio_sequence(spec, count);
    rep.gap = spectral_gap(spec);

    // least squares on (n, log e_n) over the last half of the window; the
    // error term oscillates in sign, the log of its magnitude still decays
    // along a straight line
    size_t begin = rep.points.size() / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int used = 0;
    for (size_t i = begin; i < rep.points.size(); ++i) {
        double e = rep.points[i].abs_error;
        if (!(e > 0) || !std::isfinite(std::log(e))) continue;
        double x = rep.points[i].n;
        double y = std::log(e);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++used;
    }
    if (used < 2) throw std::runtime_error("convergence_report: too few usable error points");
    double slope = (used * sxy - sx * sy) / (used * sxx - sx * sx);
    rep.fitted_rate = std::exp(slope);
    rep.rate_over_gap = rep.fitted_rate / rep.gap;
    return rep;
}

double BinetDecomposition::reconstruct(int n) const {
    std::complex<double> acc = 0;
    for (size_t j = 0; j < roots.size(); ++j)
        acc += coefficients[j] * std::pow(roots[j], std::complex<double>(n, 0));
    return acc.real();
}

BinetDecomposition binet_coefficients(const SequenceSpec& spec) {
    spec.validate();
    ComplexRootSet set = all_roots(spec);
    const int k = spec.k;
    TermVector g = recurrence_terms(spec, std::max(2, k));

    // Vandermonde system: row n is (gamma_1^n ... gamma_k^n), rhs g_n
    std::vector<std::vector<std::complex<double>>> a(k,
        std::vector<std::complex<double>>(k + 1));
    for (int n = 0; n < k; ++n) {
        for (int j = 0; j < k; ++j)
            a[n][j] = std::pow(set.roots[j], std::complex<double>(n, 0));
        a[n][k] = to_double(g[n]);
    }

    double max_pivot = 0, min_pivot = std::numeric_limits<double>::infinity();
    for (int col = 0; col < k; ++col) {
        int best = col;
        for (int r = col + 1; r < k; ++r)
            if (std::abs(a[r][col]) > std::abs(a[best][col])) best = r;
        std::swap(a[col], a[best]);
        double pivot = std::abs(a[col][col]);
        max_pivot = std::max(max_pivot, pivot);
        min_pivot = std::min(min_pivot, pivot);
        if (pivot < 1e-12 * std::max(1.0, max_pivot))
            throw std::runtime_error(
                "binet_coefficients: near-singular Vandermonde system (roots nearly coincide)");
        for (int r = col + 1; r < k; ++r) {
            std::complex<double> f = a[r][col] / a[col][col];
            for (int c = col; c <= k; ++c) a[r][c] -= f * a[col][c];
        }
    }

    BinetDecomposition dec;
    dec.roots = set.roots;
    dec.coefficients.assign(k, 0);
    for (int r = k - 1; r >= 0; --r) {
        std::complex<double> acc = a[r][k];
        for (int c = r + 1; c < k; ++c) acc -= a[r][c] * dec.coefficients[c];
        dec.coefficients[r] = acc / a[r][r];
    }
    dec.condition = max_pivot / min_pivot;
    return dec;
}

TriangleCheck triangle_refinement_check(std::complex<double> z1, std::complex<double> z2,
                                        std::complex<double> z3) {
    std::array<std::complex<double>, 3> z{z1, z2, z3};
    for (const auto& v : z)
        if (std::abs(v) == 0.0)
            throw std::invalid_argument("triangle_refinement_check: inputs must be nonzero");
    std::sort(z.begin(), z.end(),
              [](const auto& a, const auto& b) { return std::abs(a) < std::abs(b); });

    double m1 = std::abs(z[0]), m2 = std::abs(z[1]), m3 = std::abs(z[2]);
    std::complex<double> unit_sum = z[0] / m1 + z[1] / m2 + z[2] / m3;

    TriangleCheck out;
    out.lhs = std::abs(z[0] + z[1] + z[2]) + (3.0 - std::abs(unit_sum)) * m1;
    out.rhs = m1 + m2 + m3;
    out.holds = out.lhs <= out.rhs + 1e-12;
    return out;
}

bool segment_ratio_check(const BigFloat& cubic_golden_root) {
    const BigFloat& t = cubic_golden_root;
    if (t <= 0) return false;
    BigFloat a = t * t, b = t, c = 1;
    BigFloat tol("1e-12");
    return abs((a + b + c) / a - t) <= tol && abs(a / b - t) <= tol && abs(b / c - t) <= tol;
}

}  // namespace metallic
