#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace metallic {

// Exact arbitrary-precision integer. Sequence terms grow like rho^n, so
// fixed-width integers overflow around n = 60 already for k = 3, m = 2.
using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always stored reduced with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// High-precision real (~50 decimal digits) for closed-form radicals and
// for comparisons against certified enclosures.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline BigInt numerator(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator(const Rational& x) { return boost::multiprecision::denominator(x); }

/// -1, 0 or +1.
inline int sign_of(const Rational& x) { return x.sign(); }

BigInt pow_int(const BigInt& base, unsigned exp);

double to_double(const Rational& x);
double to_double(const BigInt& x);
BigFloat to_bigfloat(const Rational& x);

// Exact: a binary float is a dyadic rational.
Rational to_rational(const BigFloat& x);

// floor(a / b) with sign-correct flooring (operator/ truncates toward zero).
BigInt floor_div(const BigInt& a, const BigInt& b);

// floor(x * 10^frac_digits) -- the digit string both enclosure endpoints
// must agree on before a digit may be printed as certified.
BigInt floor_scaled(const Rational& x, int frac_digits);

enum class Rounding { Down, Up };

// Fixed-point decimal rendering with the requested number of fractional
// digits. Down rounds toward -inf, Up toward +inf, so rendering an
// interval [lo, hi] with (Down, Up) never narrows it.
std::string decimal_string(const Rational& x, int frac_digits, Rounding mode);

}  // namespace metallic
