#include "spinitf/itf.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

namespace spinitf {

namespace {

void check_indices(const EigenSystem& es, std::size_t i, std::size_t j) {
  const std::size_t n = es.dimension();
  if (i >= n || j >= n) {
    throw IndexError("node index out of range for N = " + std::to_string(n));
  }
}

std::vector<double> overlaps_of(const EigenSystem& es, std::size_t i, std::size_t j) {
  std::vector<double> out;
  out.reserve(es.distinct_count());
  const auto r = static_cast<Eigen::Index>(i);
  const auto c = static_cast<Eigen::Index>(j);
  for (const Matrix& p : es.projectors) out.push_back(p(r, c));
  return out;
}

// Amplitude <i|exp(-iHt)|j> from precomputed overlaps.
std::complex<double> amplitude(const std::vector<double>& values,
                               const std::vector<double>& overlaps, double t) {
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t k = 0; k < values.size(); ++k) {
    sum += overlaps[k] * std::polar(1.0, -values[k] * t);
  }
  return sum;
}

}  // namespace

TransferAnalysis analyze_transfer(const EigenSystem& es, std::size_t i, std::size_t j,
                                  double dark_tol) {
  check_indices(es, i, j);
  if (!(dark_tol > 0.0)) throw ArgumentError("dark_tol must be positive");
  TransferAnalysis ta;
  ta.source = i;
  ta.target = j;
  ta.overlaps = overlaps_of(es, i, j);
  double root = 0.0;
  for (std::size_t k = 0; k < ta.overlaps.size(); ++k) {
    const double o = ta.overlaps[k];
    root += std::abs(o);
    if (std::abs(o) < dark_tol) {
      ta.signs.push_back(0);
    } else {
      ta.signs.push_back(o > 0.0 ? 1 : -1);
      ta.live.push_back(k);
    }
  }
  ta.p_max = root * root;
  return ta;
}

std::vector<std::size_t> dark_states(const EigenSystem& es, std::size_t i, std::size_t j,
                                     double dark_tol) {
  const TransferAnalysis ta = analyze_transfer(es, i, j, dark_tol);
  std::vector<std::size_t> dark;
  for (std::size_t k = 0; k < ta.signs.size(); ++k) {
    if (ta.signs[k] == 0) dark.push_back(k);
  }
  return dark;
}

Matrix pmax_matrix(const EigenSystem& es, double dark_tol) {
  const auto n = static_cast<Eigen::Index>(es.dimension());
  Matrix out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double p = analyze_transfer(es, static_cast<std::size_t>(i),
                                        static_cast<std::size_t>(j), dark_tol)
                           .p_max;
      out(i, j) = p;
      out(j, i) = p;
    }
  }
  return out;
}

double ring_pmax_closed_form(std::size_t n, long gap) {
  if (n < 3) throw InvalidTopology("ring_pmax_closed_form needs n >= 3");
  const long ln = static_cast<long>(n);
  gap %= ln;
  if (gap < 0) gap += ln;
  const bool odd = (n % 2) == 1;
  const long half = odd ? (ln - 1) / 2 : (ln - 2) / 2;
  double root = odd ? 1.0 / ln : 2.0 / ln;
  for (long k = 1; k <= half; ++k) {
    const long m = (k * gap) % ln;
    root += (2.0 / ln) * std::abs(std::cos(2.0 * std::numbers::pi * m / ln));
  }
  return root * root;
}

double transfer_probability(const EigenSystem& es, std::size_t i, std::size_t j, double t) {
  check_indices(es, i, j);
  return std::norm(amplitude(es.values, overlaps_of(es, i, j), t));
}

ScanResult scan_max_probability(const EigenSystem& es, std::size_t i, std::size_t j,
                                double t_max, double dt) {
  check_indices(es, i, j);
  if (!(t_max > 0.0) || !(dt > 0.0)) throw ArgumentError("t_max and dt must be positive");
  if (dt > t_max) throw ArgumentError("dt must not exceed t_max");

  const std::vector<double> ov = overlaps_of(es, i, j);
  const auto prob = [&](double t) { return std::norm(amplitude(es.values, ov, t)); };

  const auto steps = static_cast<long>(std::floor(t_max / dt));
  ScanResult best{0.0, prob(0.0)};
  long best_step = 0;
  for (long s = 1; s <= steps; ++s) {
    const double t = static_cast<double>(s) * dt;
    const double p = prob(t);
    if (p > best.p_best) {
      best = {t, p};
      best_step = s;
    }
  }

  // Golden-section maximization on [t_best - dt, t_best + dt] within [0, t_max].
  double lo = std::max(0.0, static_cast<double>(best_step - 1) * dt);
  double hi = std::min(t_max, static_cast<double>(best_step + 1) * dt);
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = prob(x1);
  double f2 = prob(x2);
  for (int it = 0; it < 50; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = prob(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = prob(x1);
    }
  }
  const double t_ref = f1 > f2 ? x1 : x2;
  const double p_ref = std::max(f1, f2);
  if (p_ref > best.p_best) best = {t_ref, p_ref};
  return best;
}

std::vector<double> earliest_times(const EigenSystem& es, std::size_t i, std::size_t j,
                                   const std::vector<double>& eps, double t_max, double dt) {
  check_indices(es, i, j);
  if (!(t_max > 0.0) || !(dt > 0.0)) throw ArgumentError("t_max and dt must be positive");
  const double p_max = analyze_transfer(es, i, j).p_max;
  const std::vector<double> ov = overlaps_of(es, i, j);

  std::vector<double> out(eps.size(), std::numeric_limits<double>::quiet_NaN());
  std::size_t remaining = eps.size();
  const auto steps = static_cast<long>(std::floor(t_max / dt));
  for (long s = 0; s <= steps && remaining > 0; ++s) {
    const double t = static_cast<double>(s) * dt;
    const double p = std::norm(amplitude(es.values, ov, t));
    for (std::size_t e = 0; e < eps.size(); ++e) {
      if (std::isnan(out[e]) && p >= p_max - eps[e]) {
        out[e] = t;
        --remaining;
      }
    }
  }
  return out;
}

std::vector<std::pair<double, double>> simulate(const EigenSystem& es, std::size_t i,
                                                std::size_t j, double t_max, double dt) {
  check_indices(es, i, j);
  if (!(t_max > 0.0) || !(dt > 0.0)) throw ArgumentError("t_max and dt must be positive");
  const std::vector<double> ov = overlaps_of(es, i, j);
  std::vector<std::pair<double, double>> out;
  const auto steps = static_cast<long>(std::floor(t_max / dt));
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (long s = 0; s <= steps; ++s) {
    const double t = static_cast<double>(s) * dt;
    out.emplace_back(t, std::norm(amplitude(es.values, ov, t)));
  }
  return out;
}

}  // namespace spinitf
