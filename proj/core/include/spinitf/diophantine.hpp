#pragma once

// Parity-constrained simultaneous Diophantine approximation of theta by p/q:
// weighted lattice reduction, even/odd rescaling iteration and a genetic
// search over the lattice weights.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinitf/continued_fraction.hpp"
#include "spinitf/types.hpp"

namespace spinitf {

enum class Parity { even, odd, any };

/// 'e' / 'o' / 'x' per entry, e.g. "oo".
std::vector<Parity> parse_parity(const std::string& text);
std::string to_string(const std::vector<Parity>& parity);
/// Parity demanded by a constraint right-hand side (0 -> even, 1 -> odd).
std::vector<Parity> parity_from_rhs(const std::vector<int>& rhs);

struct DiophantineSolution {
  std::vector<BigInt> p;
  BigInt q = 1;
  std::vector<double> X;       ///< lattice weights
  double s = 0.0;              ///< lattice scale (0 for the continued-fraction path)
  std::vector<double> errors;  ///< |theta_k q - p_k|
  std::vector<bool> parity_ok;
  double max_error = 0.0;

  std::size_t violations() const;
  bool feasible() const { return violations() == 0; }
};

/// Fills errors, parity_ok and max_error from p and q.
DiophantineSolution make_solution(const std::vector<HighReal>& theta,
                                  const std::vector<Parity>& parity, std::vector<BigInt> p,
                                  BigInt q);

/// Raised when a search ends without a parity-feasible or converged answer;
/// carries the best candidate seen.
class SearchFailure : public ConvergenceError {
 public:
  SearchFailure(const std::string& what, DiophantineSolution best)
      : ConvergenceError(what), best_(std::move(best)) {}
  const DiophantineSolution& best() const { return best_; }

 private:
  DiophantineSolution best_;
};

enum class ExtractMode {
  first_vector,              ///< first column of the LLL-reduced basis
  shortest,                  ///< enumeration over the reduced basis
  shortest_parity_feasible,  ///< enumeration restricted to parity-feasible vectors
};

struct WeightedOptions {
  ExtractMode mode = ExtractMode::first_vector;
  /// Lattice entries are quantized at 2^-quant_bits.
  int quant_bits = 96;
  long delta_num = 3;
  long delta_den = 4;
};

/// Reduces B(s, X) = [diag(X) | -X theta ; 0 | s] and reads (p, q) off the
/// chosen lattice vector. Throws ArgumentError when q comes out as 0 (s too
/// large) and SearchFailure when a parity-restricted search finds nothing.
DiophantineSolution weighted_simultaneous_approx(const std::vector<HighReal>& theta,
                                                 const std::vector<Parity>& parity, double s,
                                                 const std::vector<double>& X,
                                                 const WeightedOptions& options = {});

/// Solutions for each scale in `scales`; scales with q = 0 are skipped.
std::vector<DiophantineSolution> scale_sweep(const std::vector<HighReal>& theta,
                                             const std::vector<Parity>& parity,
                                             const std::vector<double>& scales,
                                             const std::vector<double>& X,
                                             const WeightedOptions& options = {});

/// Convergents and semiconvergents of x with denominator <= max_q, in
/// increasing denominator order.
std::vector<Fraction> cf_candidates(const HighReal& x, const BigInt& max_q);

struct ParityFixOptions {
  /// Denominator cap for the one-dimensional continued-fraction path.
  BigInt max_denominator = 1000;
  /// Lattice scale for the multi-dimensional path.
  double s = 1e-6;
  int max_rounds = 20;
  int quant_bits = 96;
};

struct ParityFixResult {
  DiophantineSolution solution;
  std::vector<int> exponents;  ///< Y = diag(2^exponents) at convergence
  int rounds = 0;
};

/// Y(n) iteration: approximate Y^-1 theta, double Y_ii where an even numerator
/// is required but an odd one came out, and use Y_ii = 2^-d when an odd one is
/// required and the numerator carries 2^d. Throws SearchFailure when Y does
/// not settle within max_rounds or the settled answer misses the Dirichlet
/// bound |theta q - p|_inf <= 2 / q^(1/N).
ParityFixResult parity_fix_by_scaling(const std::vector<HighReal>& theta,
                                      const std::vector<Parity>& parity,
                                      const ParityFixOptions& options = {});

struct GaOptions {
  std::size_t population = 200;
  std::size_t max_gens = 50;
  std::uint64_t seed = 0;
  std::size_t tournament = 3;
  double crossover_rate = 0.8;
  double mutation_rate = 0.1;
  double violation_boost = 3.0;
  double log2_min = -8.0;
  double log2_max = 8.0;
  int quant_bits = 96;
  /// Worker threads for fitness evaluation; 0 picks hardware concurrency.
  std::size_t threads = 0;
};

struct GaResult {
  DiophantineSolution solution;
  std::size_t generations = 0;  ///< generation index at which the answer was found
  std::size_t evaluations = 0;
};

/// Evolves the weights X of weighted_simultaneous_approx (first-vector mode)
/// until an individual satisfies every parity. Deterministic for a given seed.
/// Throws SearchFailure with the best candidate when none does.
GaResult ga_weight_search(const std::vector<HighReal>& theta,
                          const std::vector<Parity>& parity, double s,
                          const GaOptions& options = {});

}  // namespace spinitf
