#include "metallic/sequences.hpp"

#include <stdexcept>
#include <string>

namespace metallic {

void SequenceSpec::validate() const {
    if (k < 2)
        throw std::invalid_argument("SequenceSpec: k must be >= 2, got " + std::to_string(k));
    if (m < 1)
        throw std::invalid_argument("SequenceSpec: m must be >= 1, got " + std::to_string(m));
}

TermVector recurrence_terms(const SequenceSpec& spec, int count) {
    spec.validate();
    if (count < 2) throw std::invalid_argument("recurrence_terms: count must be >= 2");

    std::vector<BigInt> g(count);
    g[0] = 0;
    g[1] = 1;
    for (int n = 2; n < count; ++n) {
        BigInt acc = spec.m * g[n - 1];
        for (int j = 2; j <= spec.k && j <= n; ++j) acc += g[n - j];
        g[n] = std::move(acc);
    }
    return TermVector{spec, std::move(g)};
}

TermVector gf_terms(const IntPolynomial& numerator, const IntPolynomial& denominator,
                    int count) {
    if (count < 0) throw std::invalid_argument("gf_terms: count must be >= 0");
    if (denominator.coeff(0) == 0)
        throw std::invalid_argument("gf_terms: denominator has zero constant term");

    const Rational d0{denominator.coeff(0)};
    const int dd = denominator.degree();
    std::vector<Rational> c(count);
    for (int n = 0; n < count; ++n) {
        Rational acc{numerator.coeff(n)};
        for (int i = 1; i <= dd && i <= n; ++i) acc -= Rational(denominator.coeff(i)) * c[n - i];
        c[n] = acc / d0;
    }

    std::vector<BigInt> terms(count);
    for (int n = 0; n < count; ++n) {
        if (boost::multiprecision::denominator(c[n]) != 1)
            throw std::domain_error("gf_terms: series coefficient " + std::to_string(n) +
                                    " is not an integer");
        terms[n] = boost::multiprecision::numerator(c[n]);
    }
    return TermVector{std::nullopt, std::move(terms)};
}

IntPolynomial gf_denominator(const SequenceSpec& spec) {
    spec.validate();
    std::vector<BigInt> c(spec.k + 1, BigInt(-1));
    c[0] = 1;
    c[1] = -spec.m;
    return IntPolynomial{std::move(c)};
}

}  // namespace metallic
