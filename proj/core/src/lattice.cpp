#include "spinitf/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace spinitf {

namespace {

BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Nearest integer to a / b for b > 0, ties rounded up.
BigInt round_div(const BigInt& a, const BigInt& b) {
  BigInt num = 2 * a + b;
  BigInt den = 2 * b;
  BigInt q = num / den;
  if ((num % den != 0) && (num < 0)) q -= 1;
  return q;
}

void axpy(IntVector& y, const BigInt& a, const IntVector& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] -= a * x[i];
}

void validate(const LatticeBasis& basis) {
  if (basis.columns.empty()) throw ArgumentError("lattice basis is empty");
  const std::size_t dim = basis.columns.front().size();
  for (const IntVector& c : basis.columns) {
    if (c.size() != dim) throw ArgumentError("lattice columns differ in length");
  }
  if (basis.columns.size() > dim) {
    throw ContractViolation("more basis vectors than the ambient dimension");
  }
  if (basis.delta_den <= 0 || 4 * basis.delta_num <= basis.delta_den ||
      basis.delta_num >= basis.delta_den) {
    throw ArgumentError("LLL delta must lie in (1/4, 1)");
  }
}

}  // namespace

BigInt squared_norm(const IntVector& v) { return dot(v, v); }

// Integral LLL (Cohen, "A Course in Computational Algebraic Number Theory",
// Alg. 2.6.7). d[i] are the Gram determinants, lambda[k][j] = d[j+1] mu_kj.
LllResult lll_reduce(const LatticeBasis& input) {
  validate(input);
  const std::size_t n = input.columns.size();
  LllResult out;
  out.basis = input;
  std::vector<IntVector>& b = out.basis.columns;
  std::vector<IntVector>& h = out.transform;
  h.assign(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) h[i][i] = 1;

  const BigInt num = input.delta_num;
  const BigInt den = input.delta_den;

  // 1-based bookkeeping: d[0] = 1, d[i] for vector i - 1.
  std::vector<BigInt> d(n + 1, 0);
  std::vector<std::vector<BigInt>> lam(n + 1, std::vector<BigInt>(n + 1, 0));
  d[0] = 1;
  d[1] = dot(b[0], b[0]);
  if (d[1] == 0) throw ContractViolation("zero basis vector");
  if (n == 1) return out;

  auto red = [&](std::size_t k, std::size_t l) {
    if (2 * abs(lam[k][l]) > d[l]) {
      const BigInt q = round_div(lam[k][l], d[l]);
      axpy(b[k - 1], q, b[l - 1]);
      axpy(h[k - 1], q, h[l - 1]);
      lam[k][l] -= q * d[l];
      for (std::size_t i = 1; i < l; ++i) lam[k][i] -= q * lam[l][i];
    }
  };

  std::size_t k = 2;
  std::size_t kmax = 1;
  while (k <= n) {
    if (k > kmax) {
      kmax = k;
      for (std::size_t j = 1; j <= k; ++j) {
        BigInt u = dot(b[k - 1], b[j - 1]);
        for (std::size_t i = 1; i < j; ++i) u = (d[i] * u - lam[k][i] * lam[j][i]) / d[i - 1];
        if (j < k) {
          lam[k][j] = u;
        } else {
          d[k] = u;
          if (u == 0) throw ContractViolation("lattice basis vectors are linearly dependent");
        }
      }
    }
    red(k, k - 1);
    if (den * d[k] * d[k - 2] < num * d[k - 1] * d[k - 1] - den * lam[k][k - 1] * lam[k][k - 1]) {
      // Swap b_k and b_{k-1}.
      std::swap(b[k - 1], b[k - 2]);
      std::swap(h[k - 1], h[k - 2]);
      for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
      const BigInt l = lam[k][k - 1];
      const BigInt bb = (d[k - 2] * d[k] + l * l) / d[k - 1];
      for (std::size_t i = k + 1; i <= kmax; ++i) {
        const BigInt t = lam[i][k];
        lam[i][k] = (d[k] * lam[i][k - 1] - l * t) / d[k - 1];
        lam[i][k - 1] = (bb * t + l * lam[i][k]) / d[k];
      }
      d[k - 1] = bb;
      ++out.swaps;
      if (k > 2) --k;
    } else {
      for (std::size_t l = k - 1; l-- > 1;) red(k, l);
      ++k;
    }
  }
  return out;
}

bool is_lll_reduced(const LatticeBasis& basis) {
  validate(basis);
  using Rational = boost::multiprecision::cpp_rational;
  const std::size_t n = basis.columns.size();
  std::vector<std::vector<Rational>> star(n);
  std::vector<Rational> norms(n);
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  const std::size_t dim = basis.ambient_dimension();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> v(dim);
    for (std::size_t r = 0; r < dim; ++r) v[r] = Rational(basis.columns[i][r]);
    for (std::size_t j = 0; j < i; ++j) {
      Rational ip = 0;
      for (std::size_t r = 0; r < dim; ++r) ip += Rational(basis.columns[i][r]) * star[j][r];
      mu[i][j] = ip / norms[j];
      for (std::size_t r = 0; r < dim; ++r) v[r] -= mu[i][j] * star[j][r];
    }
    Rational nn = 0;
    for (const Rational& x : v) nn += x * x;
    if (nn == 0) return false;
    star[i] = std::move(v);
    norms[i] = nn;
  }
  const Rational half = Rational(1) / 2;
  const Rational delta = Rational(basis.delta_num) / basis.delta_den;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (abs(mu[i][j]) > half) return false;
    }
    if (i > 0 && norms[i] < (delta - mu[i][i - 1] * mu[i][i - 1]) * norms[i - 1]) return false;
  }
  return true;
}

BigInt determinant(const std::vector<IntVector>& columns) {
  const std::size_t n = columns.size();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination on the row-major copy.
  std::vector<IntVector> m(n, IntVector(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (columns[r].size() != n) throw ArgumentError("determinant needs a square matrix");
    for (std::size_t c = 0; c < n; ++c) m[c][r] = columns[r][c];
  }
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::optional<EnumerationResult> shortest_vector(const LatticeBasis& reduced,
                                                 const EnumerationOptions& options) {
  validate(reduced);
  const std::size_t n = reduced.rank();
  const std::size_t dim = reduced.ambient_dimension();
  const long bound = options.coefficient_bound.value_or(std::max<long>(
      1, static_cast<long>(std::floor(std::pow(2.0 / std::sqrt(3.0), static_cast<double>(n))))));
  if (bound < 1) throw ArgumentError("coefficient bound must be >= 1");

  const double combos = std::pow(2.0 * static_cast<double>(bound) + 1.0, static_cast<double>(n));
  if (combos > static_cast<double>(options.budget)) {
    EnumerationResult fallback;
    fallback.vector = reduced.columns.front();
    fallback.coefficients.assign(n, 0);
    fallback.coefficients[0] = 1;
    fallback.exhaustive = false;
    if (options.accept && !options.accept(fallback.vector)) return std::nullopt;
    return fallback;
  }

  std::vector<long> beta(n, -bound);
  std::optional<EnumerationResult> best;
  BigInt best_norm = 0;
  IntVector v(dim);
  while (true) {
    bool zero = std::all_of(beta.begin(), beta.end(), [](long x) { return x == 0; });
    if (!zero) {
      std::fill(v.begin(), v.end(), BigInt(0));
      for (std::size_t i = 0; i < n; ++i) {
        if (beta[i] == 0) continue;
        for (std::size_t r = 0; r < dim; ++r) v[r] += beta[i] * reduced.columns[i][r];
      }
      if (!options.accept || options.accept(v)) {
        const BigInt norm = squared_norm(v);
        if (!best || norm < best_norm) {
          best_norm = norm;
          EnumerationResult r;
          r.vector = v;
          r.coefficients.assign(beta.begin(), beta.end());
          best = std::move(r);
        }
      }
    }
    std::size_t pos = 0;
    while (pos < n && beta[pos] == bound) beta[pos++] = -bound;
    if (pos == n) break;
    ++beta[pos];
  }
  return best;
}

}  // namespace spinitf
