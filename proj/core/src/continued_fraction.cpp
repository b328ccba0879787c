#include "spinitf/continued_fraction.hpp"

#include <limits>

namespace spinitf {

ContinuedFraction continued_fraction(const HighReal& x, std::size_t n_terms) {
  if (!(x > 0)) throw ArgumentError("continued_fraction requires x > 0");
  if (n_terms == 0 || n_terms > 64) throw ArgumentError("n_terms must be in [1, 64]");

  // Half the mantissa is kept as guard bits: each step amplifies the
  // representation error of the remainder.
  const HighReal floor_residual =
      boost::multiprecision::ldexp(HighReal(1), -std::numeric_limits<HighReal>::digits / 2);

  ContinuedFraction cf;
  HighReal rest = x;
  for (std::size_t n = 0; n < n_terms; ++n) {
    HighReal a = boost::multiprecision::floor(rest);
    HighReal frac = rest - a;
    if (frac != 0 && 1 - frac < floor_residual) {
      a += 1;
      frac = 0;
      cf.truncated = n + 1 < n_terms;
    }
    cf.terms.push_back(static_cast<BigInt>(a));
    if (frac == 0) break;
    if (frac < floor_residual) {
      cf.truncated = n + 1 < n_terms;
      break;
    }
    rest = 1 / frac;
  }
  return cf;
}

std::vector<Fraction> convergents(const std::vector<BigInt>& terms) {
  std::vector<Fraction> out;
  out.reserve(terms.size());
  BigInt p_prev = 1, q_prev = 0;   // p_{-1}, q_{-1}
  BigInt p_prev2 = 0, q_prev2 = 1; // p_{-2}, q_{-2}
  for (const BigInt& a : terms) {
    const BigInt p = a * p_prev + p_prev2;
    const BigInt q = a * q_prev + q_prev2;
    out.push_back({p, q});
    p_prev2 = p_prev;
    q_prev2 = q_prev;
    p_prev = p;
    q_prev = q;
  }
  return out;
}

Fraction semiconvergent(const Fraction& previous, const Fraction& next) {
  const BigInt det = previous.p * next.q - next.p * previous.q;
  if (det != 1 && det != -1) {
    throw ArgumentError("semiconvergent requires consecutive convergents (|det| = 1)");
  }
  return {previous.p + next.p, previous.q + next.q};
}

HighReal approximation_error(const HighReal& x, const Fraction& f) {
  return boost::multiprecision::abs(x * HighReal(f.q) - HighReal(f.p));
}

}  // namespace spinitf
