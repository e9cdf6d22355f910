#include "metallic/numbers.hpp"

#include <stdexcept>

namespace metallic {

BigInt pow_int(const BigInt& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

double to_double(const Rational& x) { return x.convert_to<double>(); }
double to_double(const BigInt& x) { return x.convert_to<double>(); }
BigFloat to_bigfloat(const Rational& x) { return x.convert_to<BigFloat>(); }
Rational to_rational(const BigFloat& x) { return x.convert_to<Rational>(); }

BigInt floor_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::invalid_argument("floor_div: division by zero");
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

BigInt floor_scaled(const Rational& x, int frac_digits) {
    if (frac_digits < 0) throw std::invalid_argument("floor_scaled: negative digit count");
    BigInt scale = pow_int(10, static_cast<unsigned>(frac_digits));
    return floor_div(numerator(x) * scale, denominator(x));
}

std::string decimal_string(const Rational& x, int frac_digits, Rounding mode) {
    if (frac_digits < 0) throw std::invalid_argument("decimal_string: negative digit count");
    BigInt scale = pow_int(10, static_cast<unsigned>(frac_digits));
    BigInt num = numerator(x) * scale;
    BigInt den = denominator(x);
    BigInt q = floor_div(num, den);
    if (mode == Rounding::Up && num % den != 0) ++q;

    bool negative = q < 0;
    std::string digits = BigInt(boost::multiprecision::abs(q)).str();
    if (static_cast<int>(digits.size()) <= frac_digits)
        digits.insert(0, frac_digits + 1 - digits.size(), '0');

    std::string out;
    if (negative) out += '-';
    out += digits.substr(0, digits.size() - frac_digits);
    if (frac_digits > 0) {
        out += '.';
        out += digits.substr(digits.size() - frac_digits);
    }
    return out;
}

}  // namespace metallic
