#pragma once

#include <vector>

#include "metallic/numbers.hpp"

namespace metallic {

/// Dense integer-coefficient polynomial, coefficients stored in ascending
/// degree. The zero polynomial has an empty coefficient vector; any other
/// polynomial keeps a nonzero leading coefficient.
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> ascending);

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    const BigInt& leading() const;

    /// Coefficient of x^i, zero beyond the stored range.
    BigInt coeff(int i) const;

    static IntPolynomial zero() { return IntPolynomial{}; }
    static IntPolynomial constant(BigInt c);
    /// c * x^d
    static IntPolynomial monomial(BigInt c, int d);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a);

IntPolynomial derivative(const IntPolynomial& p);

/// Exact rational evaluation by Horner's rule; the sign of the result is
/// exact, which is what the bisection certificates rely on.
Rational eval_exact(const IntPolynomial& p, const Rational& x);

/// Number of sign changes in the coefficient sequence, zeros skipped
/// (Descartes' bound on the count of positive real roots).
int descartes_sign_changes(const IntPolynomial& p);

/// gcd of all coefficients, positive; 0 for the zero polynomial.
BigInt content(const IntPolynomial& p);

/// p divided by its content, normalized to a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Primitive gcd via a primitive pseudo-remainder sequence. Keeping every
/// remainder primitive caps the coefficient growth that a plain rational
/// Euclidean algorithm would suffer.
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

/// True iff gcd(p, p') is constant, i.e. p has no repeated roots.
bool is_squarefree(const IntPolynomial& p);

}  // namespace metallic
