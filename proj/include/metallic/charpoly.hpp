#pragma once

#include <utility>

#include "metallic/polynomial.hpp"
#include "metallic/sequences.hpp"

namespace metallic {

/// Characteristic polynomial of the level-m order-k recurrence:
///   x^k - m*x^{k-1} - x^{k-2} - ... - x - 1.
IntPolynomial metallic_charpoly(const SequenceSpec& spec);

/// The auxiliary polynomial (x - 1) * p_m(x) in its collapsed form
///   x^{k+1} - (m+1)*x^k + (m-1)*x^{k-1} + 1,
/// whose sparse shape drives the endpoint and simplicity arguments.
IntPolynomial q_poly(const SequenceSpec& spec);

/// Exact values (p_m(m), p_m(m+1)) via the closed forms
///   p_m(m)   = 1 - k                     for m = 1,
///            = (1 - m^{k-1}) / (m - 1)   for m > 1,
///   p_m(m+1) = ((m-1)*(m+1)^{k-1} + 1) / m.
/// The first is always negative and the second positive, which brackets the
/// dominant root inside (m, m+1).
std::pair<Rational, Rational> endpoint_values(const SequenceSpec& spec);

}  // namespace metallic
