#include "spinitf/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

#include "spinitf/itf.hpp"

namespace spinitf {

namespace {

constexpr double kZeroTol = 1e-10;

void note(AxiomVerdict& v, double margin, std::size_t i, std::size_t j, std::size_t k) {
  v.holds = false;
  if (!v.witness || margin > v.worst) {
    v.worst = margin;
    v.witness = std::array<std::size_t, 3>{i, j, k};
  }
}

void check_square(const Matrix& d) {
  if (d.rows() != d.cols()) throw ArgumentError("distance matrix must be square");
}

}  // namespace

double asymptotic_ring_distance() { return 2.0 * std::log(std::numbers::pi / 2.0); }

DistanceMatrix distance_matrix(const Matrix& pmax) {
  check_square(pmax);
  const Eigen::Index n = pmax.rows();
  DistanceMatrix out;
  out.d = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double p = pmax(i, j);
      if (!(p >= 0.0) || p > 1.0 + 1e-9) {
        throw ArgumentError("p_max entries must lie in [0, 1]");
      }
      if (i == j) continue;
      if (p == 0.0) {
        out.d(i, j) = std::numeric_limits<double>::infinity();
        if (i < j) out.unreachable.emplace_back(i, j);
      } else {
        out.d(i, j) = -std::log(std::min(p, 1.0));
      }
    }
  }
  return out;
}

AxiomReport audit_axioms(const Matrix& d, double triangle_tol) {
  check_square(d);
  const auto n = static_cast<std::size_t>(d.rows());
  const auto at = [&](std::size_t i, std::size_t j) {
    return d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  };
  AxiomReport r;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(at(i, i)) > kZeroTol) note(r.identity, std::abs(at(i, i)), i, i, i);
    for (std::size_t j = 0; j < n; ++j) {
      if (at(i, j) < -1e-12) note(r.nonneg, -at(i, j), i, j, j);
      if (at(i, j) != at(j, i)) note(r.symmetry, std::abs(at(i, j) - at(j, i)), i, j, j);
      if (i != j && at(i, j) <= kZeroTol) note(r.separation, kZeroTol - at(i, j), i, j, j);
      for (std::size_t k = 0; k < n; ++k) {
        const double via = at(i, k) + at(k, j);
        if (std::isinf(via)) continue;
        const double margin = at(i, j) - via;
        if (margin > triangle_tol) note(r.triangle, margin, i, k, j);
      }
    }
  }
  return r;
}

std::vector<std::vector<std::size_t>> antipodal_classes(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  if (n % 2 == 0) {
    for (std::size_t i = 0; i < n / 2; ++i) out.push_back({i, i + n / 2});
  } else {
    for (std::size_t i = 0; i < n; ++i) out.push_back({i});
  }
  return out;
}

Matrix identify_antipodes(const Matrix& d) {
  check_square(d);
  if (d.rows() % 2 != 0) throw ArgumentError("antipodal identification needs an even ring");
  const Eigen::Index h = d.rows() / 2;
  return d.topLeftCorner(h, h);
}

MetricAudit metric_audit(const Matrix& d, bool even_ring, double triangle_tol) {
  MetricAudit out;
  out.raw = audit_axioms(d, triangle_tol);
  const Eigen::Index n = d.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (d(i, j) <= kZeroTol) {
        out.separation_failures.emplace_back(static_cast<std::size_t>(i),
                                             static_cast<std::size_t>(j));
      }
    }
  }
  if (!even_ring) return out;
  if (n % 2 != 0) throw ArgumentError("even_ring audit needs an even number of nodes");

  const Eigen::Index h = n / 2;
  out.failures_are_antipodal = static_cast<Eigen::Index>(out.separation_failures.size()) == h;
  for (const auto& [i, j] : out.separation_failures) {
    if (static_cast<Eigen::Index>(j - i) != h) out.failures_are_antipodal = false;
  }
  out.quotient_well_defined = true;
  for (Eigen::Index i = 0; i < h; ++i) {
    for (Eigen::Index j = 0; j < h; ++j) {
      for (Eigen::Index a : {i, i + h}) {
        for (Eigen::Index b : {j, j + h}) {
          if (std::abs(d(a, b) - d(i, j)) > triangle_tol && !(i == j)) {
            out.quotient_well_defined = false;
          }
        }
      }
    }
  }
  out.identified = audit_axioms(identify_antipodes(d), triangle_tol);
  return out;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

UniformityResult uniformity_check(const Matrix& d, std::size_t n, double tol) {
  check_square(d);
  if (static_cast<std::size_t>(d.rows()) != n || n < 3) {
    throw ArgumentError("uniformity_check needs an n x n ring distance matrix, n >= 3");
  }
  UniformityResult out;
  out.predicted = is_prime(n) || (n % 2 == 0 && is_prime(n / 2));
  const Matrix q = n % 2 == 0 ? identify_antipodes(d) : d;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0.0;
  long count = 0;
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
      if (i == j) continue;
      lo = std::min(lo, q(i, j));
      hi = std::max(hi, q(i, j));
      sum += q(i, j);
      ++count;
    }
  }
  if (count > 0 && hi - lo <= tol) out.c_n = sum / static_cast<double>(count);
  return out;
}

Curvature embedding_curvature(double c_p, std::size_t p) {
  if (p < 3 || !is_prime(p)) throw ArgumentError("embedding_curvature needs a prime p >= 3");
  if (!(c_p > 0.0)) throw ArgumentError("c_p must be positive");
  const double angle = std::acos(-1.0 / static_cast<double>(p - 1));
  const double kappa = (angle / c_p) * (angle / c_p);
  return {kappa, kappa};
}

double asymptotic_gap(const Matrix& d, bool even_ring) {
  check_square(d);
  const Eigen::Index n = d.rows();
  const double limit = asymptotic_ring_distance();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (even_ring && 2 * (j - i) == n) continue;
      worst = std::max(worst, std::abs(d(i, j) - limit));
    }
  }
  return worst;
}

double ring_root_pmax_deviation(std::size_t n) {
  double worst = 0.0;
  for (std::size_t gap = 1; gap <= n / 2; ++gap) {
    if (n % 2 == 0 && 2 * gap == n) continue;
    const double root = std::sqrt(ring_pmax_closed_form(n, static_cast<long>(gap)));
    worst = std::max(worst, std::abs(root - 2.0 / std::numbers::pi));
  }
  return worst;
}

GeometryReport geometry_report(const Matrix& pmax, std::optional<std::size_t> ring_n,
                               double triangle_tol) {
  GeometryReport r;
  r.distances = distance_matrix(pmax);
  const bool even_ring = ring_n && *ring_n % 2 == 0;
  r.audit = metric_audit(r.distances.d, even_ring, triangle_tol);
  if (ring_n) {
    r.uniformity = uniformity_check(r.distances.d, *ring_n);
    r.asymptotic_gap = asymptotic_gap(r.distances.d, even_ring);
    if (*ring_n >= 3 && is_prime(*ring_n) && r.uniformity->c_n && *r.uniformity->c_n > 0.0) {
      r.curvature = embedding_curvature(*r.uniformity->c_n, *ring_n);
    }
  }
  return r;
}

}  // namespace spinitf
