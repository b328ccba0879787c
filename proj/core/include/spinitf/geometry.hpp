#pragma once

// Information-transfer distance d(i,j) = -ln p_max(i,j) and its metric
// properties on rings.

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "spinitf/types.hpp"

namespace spinitf {

/// Limit of ring distances as N grows: 2 ln(pi/2).
double asymptotic_ring_distance();

struct DistanceMatrix {
  Matrix d;  ///< +inf where unreachable
  std::vector<std::pair<std::size_t, std::size_t>> unreachable;  ///< i < j
  std::size_t size() const { return static_cast<std::size_t>(d.rows()); }
};

/// Elementwise -ln with zero diagonal. Entries must lie in [0, 1 + 1e-9];
/// values above 1 from rounding are clamped. p_max = 0 is recorded as
/// unreachable.
DistanceMatrix distance_matrix(const Matrix& pmax);

struct AxiomVerdict {
  bool holds = true;
  double worst = 0.0;  ///< largest violation margin seen
  std::optional<std::array<std::size_t, 3>> witness;
};

struct AxiomReport {
  AxiomVerdict nonneg, identity, symmetry, triangle, separation;
  bool metric() const {
    return nonneg.holds && identity.holds && symmetry.holds && triangle.holds && separation.holds;
  }
};

AxiomReport audit_axioms(const Matrix& d, double triangle_tol = 1e-9);

struct MetricAudit {
  AxiomReport raw;
  /// Off-diagonal pairs at distance zero, i < j.
  std::vector<std::pair<std::size_t, std::size_t>> separation_failures;
  /// Even rings only.
  std::optional<AxiomReport> identified;
  bool failures_are_antipodal = false;
  bool quotient_well_defined = false;
};

MetricAudit metric_audit(const Matrix& d, bool even_ring, double triangle_tol = 1e-9);

/// {i, i + n/2} for even n, singletons otherwise.
std::vector<std::vector<std::size_t>> antipodal_classes(std::size_t n);

/// Distance matrix on antipodal classes (representatives 0..n/2-1).
Matrix identify_antipodes(const Matrix& d);

bool is_prime(std::size_t n);

struct UniformityResult {
  std::optional<double> c_n;
  bool predicted = false;  ///< n = p or n = 2p
  bool agrees() const { return c_n.has_value() == predicted; }
};

UniformityResult uniformity_check(const Matrix& d, std::size_t n, double tol = 1e-9);

struct Curvature {
  double kappa_max = 0.0;
  double kappa_irreducible = 0.0;
  double radius() const { return 1.0 / std::sqrt(kappa_irreducible); }
};

/// kappa = (arccos(-1/(p-1)) / c_p)^2. Throws ArgumentError unless p >= 3 is
/// prime and c_p > 0.
Curvature embedding_curvature(double c_p, std::size_t p);

/// max over non-antipodal off-diagonal entries of |d - 2 ln(pi/2)|.
double asymptotic_gap(const Matrix& d, bool even_ring);

/// max over gaps (not 0 mod n/2) of |sqrt(p_max) - 2/pi| for the uniform ring.
double ring_root_pmax_deviation(std::size_t n);

struct GeometryReport {
  DistanceMatrix distances;
  MetricAudit audit;
  std::optional<UniformityResult> uniformity;
  std::optional<Curvature> curvature;
  std::optional<double> asymptotic_gap;
};

/// Full report. Ring-specific parts are filled when ring_n is given.
GeometryReport geometry_report(const Matrix& pmax, std::optional<std::size_t> ring_n,
                               double triangle_tol = 1e-9);

}  // namespace spinitf
