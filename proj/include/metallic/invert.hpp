#pragma once

#include "metallic/sequences.hpp"

namespace metallic {

/// INVERT transform: for A(x) = sum_{n>=1} a_n x^n, returns the coefficients
/// of B = A / (1 - A), i.e. b_n = a_n + sum_{i=1}^{n-1} a_i * b_{n-i}.
/// Input must start with a 0 (no constant term); output has the same length.
TermVector invert_once(const TermVector& a);

/// `times`-fold composition of invert_once; times = 0 is the identity.
TermVector invert_iterate(const TermVector& a, int times);

/// Inverse transform, solving a_n = b_n - sum_{i=1}^{n-1} a_i * b_{n-i}.
/// deinvert(invert_once(a)) == a for every valid a; arbitrary input may
/// produce negative terms.
TermVector deinvert(const TermVector& b);

}  // namespace metallic
