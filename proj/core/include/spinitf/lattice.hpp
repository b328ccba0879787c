#pragma once

// Exact-integer lattice basis reduction (LLL) and short-vector enumeration.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "spinitf/types.hpp"

namespace spinitf {

using IntVector = std::vector<BigInt>;

/// Basis of an integer lattice, one column per basis vector.
struct LatticeBasis {
  std::vector<IntVector> columns;
  /// Lovasz parameter delta = delta_num / delta_den, 1/4 < delta < 1.
  long delta_num = 3;
  long delta_den = 4;

  std::size_t rank() const { return columns.size(); }
  std::size_t ambient_dimension() const {
    return columns.empty() ? 0 : columns.front().size();
  }
};

struct LllResult {
  LatticeBasis basis;
  /// Unimodular change of basis: reduced column k = sum_i transform[k][i] * input column i.
  std::vector<IntVector> transform;
  long swaps = 0;
};

/// Integral LLL on independent columns, all arithmetic in BigInt.
/// Throws ArgumentError for ragged/empty input or delta outside (1/4, 1) and
/// ContractViolation when the columns are linearly dependent.
LllResult lll_reduce(const LatticeBasis& basis);

/// Checks size reduction (|mu_kj| <= 1/2) and the Lovasz condition using
/// exact rational arithmetic.
bool is_lll_reduced(const LatticeBasis& basis);

BigInt squared_norm(const IntVector& v);

/// Determinant of a square integer matrix given as columns (Bareiss).
BigInt determinant(const std::vector<IntVector>& columns);

struct EnumerationResult {
  IntVector vector;        ///< best lattice vector found
  IntVector coefficients;  ///< its coordinates in the reduced basis
  bool exhaustive = true;  ///< false when the budget forced the LLL fallback
};

struct EnumerationOptions {
  /// Coefficient bound |beta_i| <= bound; defaults to floor((2/sqrt 3)^rank), at least 1.
  std::optional<long> coefficient_bound;
  /// Maximum number of coefficient vectors visited.
  std::size_t budget = 5'000'000;
  /// Optional acceptance filter on candidate vectors.
  std::function<bool(const IntVector&)> accept;
};

/// Minimum-norm nonzero vector among sum_i beta_i b_i with bounded beta.
/// Without a filter and within budget this is the shortest lattice vector
/// for an LLL-reduced basis. When the budget is exceeded the first basis
/// vector is returned with exhaustive = false. Returns nullopt only when a
/// filter rejects every candidate.
std::optional<EnumerationResult> shortest_vector(const LatticeBasis& reduced,
                                                 const EnumerationOptions& options = {});

}  // namespace spinitf
