#include "metallic/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace metallic {

namespace {

int exact_sign_at(const IntPolynomial& p, const Rational& x) {
    return sign_of(eval_exact(p, x));
}

RealRootEnclosure initial_bracket(const SequenceSpec& spec) {
    RealRootEnclosure e;
    e.poly = metallic_charpoly(spec);
    e.lo = spec.m;
    e.hi = spec.m + 1;
    e.sign_lo = exact_sign_at(e.poly, e.lo);
    e.sign_hi = exact_sign_at(e.poly, e.hi);
    if (e.sign_lo >= 0 || e.sign_hi <= 0)
        throw std::logic_error("dominant_root: bracket [m, m+1] lost its sign change");
    return e;
}

// cube root with sign, polished by Newton to full working precision
BigFloat cbrt_signed(const BigFloat& t) {
    if (t == 0) return BigFloat(0);
    BigFloat a = abs(t);
    BigFloat y = pow(a, BigFloat(1) / 3);
    for (int i = 0; i < 4; ++i) y -= (y * y * y - a) / (3 * y * y);
    return t < 0 ? -y : y;
}

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
    std::complex<double> acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double eval_scale(const std::vector<double>& c, std::complex<double> z) {
    double r = std::abs(z);
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

}  // namespace

RealRootEnclosure refine(RealRootEnclosure e, const Rational& max_width) {
    if (max_width <= 0) throw std::invalid_argument("refine: width bound must be positive");
    while (e.width() > max_width) {
        Rational mid = e.midpoint();
        int s = exact_sign_at(e.poly, mid);
        if (s == 0)
            throw std::logic_error("refine: hit an exact rational root, bracket is degenerate");
        if (s < 0) {
            e.lo = std::move(mid);
            e.sign_lo = s;
        } else {
            e.hi = std::move(mid);
            e.sign_hi = s;
        }
    }
    return e;
}

RealRootEnclosure dominant_root(const SequenceSpec& spec, int precision_bits) {
    spec.validate();
    if (precision_bits < 1)
        throw std::invalid_argument("dominant_root: precision_bits must be >= 1");
    Rational target(BigInt(1), pow_int(2, static_cast<unsigned>(precision_bits)));
    return refine(initial_bracket(spec), target);
}

BigFloat quadratic_closed_form(int m) {
    if (m < 1) throw std::invalid_argument("quadratic_closed_form: m must be >= 1");
    BigFloat mm(m);
    return (mm + sqrt(mm * mm + 4)) / 2;
}

BigFloat cubic_closed_form(int m) {
    if (m < 1) throw std::invalid_argument("cubic_closed_form: m must be >= 1");
    // depressed cubic: x = y + m/3 turns x^3 - m x^2 - x - 1 into y^3 + p y + q
    BigFloat mm(m);
    BigFloat p = -(1 + mm * mm / 3);
    BigFloat q = -(1 + mm / 3 + 2 * mm * mm * mm / 27);
    BigFloat disc = q * q / 4 + p * p * p / 27;
    if (disc <= 0)
        throw std::runtime_error("cubic_closed_form: unexpected discriminant sign, "
                                 "single-real-root branch does not apply");
    BigFloat s = sqrt(disc);
    BigFloat y = cbrt_signed(-q / 2 + s) + cbrt_signed(-q / 2 - s);
    return y + mm / 3;
}

std::vector<std::complex<double>> aberth_roots(const std::vector<double>& ascending,
                                               double step_tol, int max_iter) {
    if (ascending.size() < 2 || ascending.back() == 0.0)
        throw std::invalid_argument("aberth_roots: need degree >= 1 with nonzero leading coefficient");
    const int deg = static_cast<int>(ascending.size()) - 1;
    const double lead = ascending.back();

    std::vector<double> dcoeffs(deg);
    for (int i = 1; i <= deg; ++i) dcoeffs[i - 1] = ascending[i] * i;

    double maxc = 0;
    for (int i = 0; i < deg; ++i) maxc = std::max(maxc, std::abs(ascending[i] / lead));
    const double radius = 1.0 + maxc;

    // phase offset keeps the start set away from the real axis
    std::vector<std::complex<double>> z(deg);
    for (int i = 0; i < deg; ++i) {
        double theta = 2.0 * std::numbers::pi * i / deg + std::numbers::pi / (2 * deg) + 0.25;
        z[i] = std::polar(radius, theta);
    }

    for (int iter = 0; iter < max_iter; ++iter) {
        double worst_rel_step = 0;
        for (int i = 0; i < deg; ++i) {
            std::complex<double> pv = horner(ascending, z[i]);
            std::complex<double> dv = horner(dcoeffs, z[i]);
            std::complex<double> newton = (dv == 0.0) ? std::complex<double>(0) : pv / dv;
            std::complex<double> rep = 0;
            for (int j = 0; j < deg; ++j)
                if (j != i) rep += 1.0 / (z[i] - z[j]);
            std::complex<double> denom = 1.0 - newton * rep;
            std::complex<double> w = (denom == 0.0) ? newton : newton / denom;
            z[i] -= w;
            double zmag = std::max(std::abs(z[i]), 1e-300);
            worst_rel_step = std::max(worst_rel_step, std::abs(w) / zmag);
        }
        if (worst_rel_step <= step_tol) return z;
    }

    std::vector<double> res(deg);
    for (int i = 0; i < deg; ++i) res[i] = std::abs(horner(ascending, z[i]));
    std::ostringstream msg;
    msg << "aberth_roots: no convergence after " << max_iter << " iterations; residuals:";
    for (double r : res) msg << ' ' << r;
    throw RootConvergenceError(msg.str(), std::move(res));
}

ComplexRootSet all_roots(const SequenceSpec& spec, double tol) {
    spec.validate();
    if (!(tol > 0)) throw std::invalid_argument("all_roots: tol must be positive");

    IntPolynomial p = metallic_charpoly(spec);
    std::vector<double> coeffs(p.coeffs.size());
    for (size_t i = 0; i < p.coeffs.size(); ++i) coeffs[i] = to_double(p.coeffs[i]);

    std::vector<std::complex<double>> roots = aberth_roots(coeffs);

    // dominant root first, rest by modulus descending; conjugates stay
    // adjacent with the lower half-plane one first
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma > mb;
        if (a.imag() != b.imag()) return a.imag() < b.imag();
        return a.real() < b.real();
    });

    ComplexRootSet set;
    set.roots = std::move(roots);
    set.residuals.resize(set.roots.size());
    std::vector<double> bad;
    for (size_t i = 0; i < set.roots.size(); ++i) {
        set.residuals[i] = std::abs(horner(coeffs, set.roots[i]));
        if (set.residuals[i] > tol * eval_scale(coeffs, set.roots[i]))
            bad.push_back(set.residuals[i]);
    }
    if (!bad.empty()) {
        std::ostringstream msg;
        msg << "all_roots: " << bad.size() << " root(s) exceed the residual bound, tol=" << tol;
        throw RootConvergenceError(msg.str(), set.residuals);
    }

    int dominant = -1;
    const double im_tol = 1e-9;
    for (size_t i = 0; i < set.roots.size(); ++i) {
        const auto& r = set.roots[i];
        if (r.real() > 0 && std::abs(r.imag()) <= im_tol * (1.0 + std::abs(r.real()))) {
            if (dominant >= 0)
                throw RootConvergenceError("all_roots: more than one positive real root",
                                           set.residuals);
            dominant = static_cast<int>(i);
        }
    }
    if (dominant != 0)
        throw RootConvergenceError("all_roots: dominant positive real root not found first",
                                   set.residuals);
    set.dominant_index = dominant;
    set.roots[0] = {set.roots[0].real(), 0.0};  // certified real by the sign change on (m, m+1)
    return set;
}

double spectral_gap(const SequenceSpec& spec) {
    ComplexRootSet set = all_roots(spec);
    double rho = std::abs(set.roots[set.dominant_index]);
    double second = 0;
    for (size_t i = 0; i < set.roots.size(); ++i)
        if (static_cast<int>(i) != set.dominant_index)
            second = std::max(second, std::abs(set.roots[i]));
    return second / rho;
}

}  // namespace metallic
