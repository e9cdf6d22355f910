#include "metallic/charpoly.hpp"

namespace metallic {

IntPolynomial metallic_charpoly(const SequenceSpec& spec) {
    spec.validate();
    std::vector<BigInt> c(spec.k + 1, BigInt(-1));
    c[spec.k] = 1;
    c[spec.k - 1] = -spec.m;
    return IntPolynomial{std::move(c)};
}

IntPolynomial q_poly(const SequenceSpec& spec) {
    spec.validate();
    std::vector<BigInt> c(spec.k + 2);
    c[0] = 1;
    c[spec.k - 1] = spec.m - 1;
    c[spec.k] = -(spec.m + 1);
    c[spec.k + 1] = 1;
    return IntPolynomial{std::move(c)};
}

std::pair<Rational, Rational> endpoint_values(const SequenceSpec& spec) {
    spec.validate();
    const int k = spec.k;
    const BigInt m = spec.m;
    Rational at_m;
    if (spec.m == 1)
        at_m = Rational(1 - k);
    else
        at_m = Rational(1 - pow_int(m, k - 1), m - 1);
    Rational at_m1 = Rational((m - 1) * pow_int(m + 1, k - 1) + 1, m);
    return {at_m, at_m1};
}

}  // namespace metallic
