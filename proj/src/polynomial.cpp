#include "metallic/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace metallic {

namespace {

void trim(std::vector<BigInt>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// prem(a, b): remainder of lc(b)^(deg a - deg b + 1) * a divided by b.
// Exact integer arithmetic throughout.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
    const int db = b.degree();
    const BigInt& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        BigInt la = a.leading();
        std::vector<BigInt> next(a.coeffs.size());
        for (int i = 0; i < static_cast<int>(a.coeffs.size()); ++i) {
            BigInt v = a.coeffs[i] * lb;
            if (i - shift >= 0 && i - shift <= db) v -= la * b.coeffs[i - shift];
            next[i] = std::move(v);
        }
        trim(next);
        a.coeffs = std::move(next);
    }
    return a;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs(std::move(ascending)) {
    trim(coeffs);
}

const BigInt& IntPolynomial::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs.back();
}

BigInt IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0;
    return coeffs[i];
}

IntPolynomial IntPolynomial::constant(BigInt c) {
    return IntPolynomial{{std::move(c)}};
}

IntPolynomial IntPolynomial::monomial(BigInt c, int d) {
    if (d < 0) throw std::invalid_argument("monomial: negative degree");
    std::vector<BigInt> v(d + 1);
    v[d] = std::move(c);
    return IntPolynomial{std::move(v)};
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return IntPolynomial{std::move(c)};
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return IntPolynomial{std::move(c)};
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial::zero();
    std::vector<BigInt> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return IntPolynomial{std::move(c)};
}

IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<BigInt> c = a.coeffs;
    for (auto& v : c) v = -v;
    return IntPolynomial{std::move(c)};
}

IntPolynomial derivative(const IntPolynomial& p) {
    if (p.degree() <= 0) return IntPolynomial::zero();
    std::vector<BigInt> c(p.coeffs.size() - 1);
    for (size_t i = 1; i < p.coeffs.size(); ++i) c[i - 1] = p.coeffs[i] * BigInt(i);
    return IntPolynomial{std::move(c)};
}

Rational eval_exact(const IntPolynomial& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

int descartes_sign_changes(const IntPolynomial& p) {
    int changes = 0;
    int prev = 0;
    for (const auto& c : p.coeffs) {
        int s = c.sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

BigInt content(const IntPolynomial& p) {
    BigInt g = 0;
    for (const auto& c : p.coeffs) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return boost::multiprecision::abs(g);
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<BigInt> c = p.coeffs;
    for (auto& v : c) v /= g;
    return IntPolynomial{std::move(c)};
}

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_squarefree(const IntPolynomial& p) {
    if (p.degree() < 1) throw std::invalid_argument("is_squarefree: degree must be >= 1");
    return poly_gcd(p, derivative(p)).degree() == 0;
}

}  // namespace metallic
