#pragma once

#include <optional>
#include <vector>

#include "metallic/numbers.hpp"
#include "metallic/polynomial.hpp"

namespace metallic {

/// Selects the recurrence order k >= 2 and the invert level m >= 1 (which is
/// also the leading recurrence coefficient). Every derived object -- terms,
/// characteristic polynomial, roots, tilings -- is keyed by this pair.
struct SequenceSpec {
    int k = 2;
    int m = 1;

    /// Throws std::invalid_argument unless k >= 2 and m >= 1.
    void validate() const;

    friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;
};

/// Exact integer terms indexed from n = 0. `spec` is set when the vector was
/// produced from a SequenceSpec and empty for raw external sequences.
struct TermVector {
    std::optional<SequenceSpec> spec;
    std::vector<BigInt> terms;

    std::size_t size() const { return terms.size(); }
    const BigInt& operator[](std::size_t n) const { return terms[n]; }

    friend bool operator==(const TermVector&, const TermVector&) = default;
};

/// Terms g_0 .. g_{count-1} of the order-k sequence at invert level m:
/// g_0 = 0, g_1 = 1, and for n >= 2
///   g_n = m*g_{n-1} + g_{n-2} + ... + g_{n-k}
/// with the sum truncated at index 0 while n < k. The truncated recurrence
/// is exactly the expansion of x / (1 - m*x - x^2 - ... - x^k), so no
/// separate initial-value table is needed.
TermVector recurrence_terms(const SequenceSpec& spec, int count);

/// First `count` power-series coefficients of numerator/denominator, by
/// exact long division. The denominator needs a nonzero constant term, and
/// every requested coefficient must come out integral.
TermVector gf_terms(const IntPolynomial& numerator, const IntPolynomial& denominator,
                    int count);

/// 1 - m*x - x^2 - ... - x^k, the denominator of the generating function.
IntPolynomial gf_denominator(const SequenceSpec& spec);

}  // namespace metallic
