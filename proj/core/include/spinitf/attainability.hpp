#pragma once

// Phase-alignment constraints for reaching p_max between a pair of nodes,
// reduced to a translation on a torus, and integer-relation detection on the
// resulting frequencies.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "spinitf/itf.hpp"

namespace spinitf {

using EigenPair = std::pair<std::size_t, std::size_t>;

struct ConstraintSystem {
  std::size_t source = 0;
  std::size_t target = 0;
  /// Live eigenspace indices in the order used to form S (descending
  /// eigenvalue unless `reordered`).
  std::vector<std::size_t> live;
  std::vector<int> live_signs;
  bool reordered = false;

  /// Spanning set S of consecutive live pairs and omega_kl = (lambda_k - lambda_l) / pi.
  std::vector<EigenPair> pairs;
  std::vector<double> frequencies;
  std::vector<HighReal> frequencies_hp;

  std::size_t reference = 0;  ///< index into `pairs`, s_m = s_n
  HighReal omega_ref;

  /// Entries over S0 = S minus the reference pair.
  std::vector<EigenPair> theta_pairs;
  std::vector<HighReal> theta;  ///< 2 omega_kl / omega_mn
  std::vector<int> parity_rhs;  ///< ((s_k - s_l)/2) mod 2

  std::size_t n_bar() const { return theta.size(); }
  std::size_t live_count() const { return live.size(); }
  std::vector<double> theta_double() const;
};

/// omega_kl = (lambda_k - lambda_l) / pi in HighReal.
HighReal transition_frequency(const EigenSystem& es, std::size_t k, std::size_t l);

/// ((s_k - s_l) / 2) mod 2.
int pair_parity(int s_k, int s_l);

/// Throws UnsupportedCase when fewer than three eigenspaces are live.
ConstraintSystem build_constraints(const TransferAnalysis& ta, const EigenSystem& es);

struct DependenceResult {
  std::optional<std::vector<long>> relation;
  /// |alpha . f| for the returned relation.
  double residual = 0.0;
  long max_coeff = 0;
  /// A relation certifies dependence. Its absence is only evidence of
  /// independence up to max_coeff.
  bool certified() const { return relation.has_value(); }
};

/// Integer relation alpha, |alpha|_inf <= max_coeff, |alpha . f| < tol, found
/// by LLL on the identity lattice augmented with a scaled frequency row.
/// Throws ArgumentError for empty input, zero entries or max_coeff < 1.
DependenceResult rational_dependence_search(const std::vector<HighReal>& frequencies,
                                            long max_coeff = 50, double tol = 1e-10);
DependenceResult rational_dependence_search(const std::vector<double>& frequencies,
                                            long max_coeff = 50, double tol = 1e-10);

enum class Verdict { independent_evidence, dependent_with_relation, degenerate };

const char* to_string(Verdict v);

struct VerdictResult {
  Verdict verdict = Verdict::degenerate;
  std::optional<std::vector<long>> relation;  ///< over (1, theta...)
};

/// Runs the relation search on {1} together with theta.
VerdictResult attainability_verdict(const ConstraintSystem& cs, long dep_search_bound = 50,
                                    double tol = 1e-10);

/// Convenience for one pair: `degenerate` when fewer than three eigenspaces
/// are live, the verdict on the constraint system otherwise.
VerdictResult pair_verdict(const EigenSystem& es, std::size_t i, std::size_t j,
                           long dep_search_bound = 50, double dark_tol = kDefaultDarkTol);

}  // namespace spinitf
