#pragma once

// One-dimensional rational approximation: continued fractions, convergents
// and semiconvergents (mediants of consecutive convergents).

#include <cstddef>
#include <vector>

#include "spinitf/types.hpp"

namespace spinitf {

struct Fraction {
  BigInt p;
  BigInt q;

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct ContinuedFraction {
  std::vector<BigInt> terms;  ///< [a0; a1, a2, ...]
  /// Set when expansion stopped because the remainder came within the
  /// working precision of an integer before n_terms were produced.
  bool truncated = false;
};

/// Standard expansion at HighReal precision. Requires x > 0 and
/// 1 <= n_terms <= 64. Terminates early when the remainder is zero (no flag)
/// or within half the mantissa of an integer (truncated), so rationals with
/// small terms expand to their exact CF.
ContinuedFraction continued_fraction(const HighReal& x, std::size_t n_terms);

/// Three-term recurrence p_n = a_n p_{n-1} + p_{n-2}, same for q.
std::vector<Fraction> convergents(const std::vector<BigInt>& terms);

/// Mediant (p1 + p2) / (q1 + q2) of two consecutive convergents. Throws
/// ArgumentError unless |p1 q2 - p2 q1| == 1.
Fraction semiconvergent(const Fraction& previous, const Fraction& next);

/// |x q - p| evaluated in HighReal.
HighReal approximation_error(const HighReal& x, const Fraction& f);

}  // namespace spinitf
