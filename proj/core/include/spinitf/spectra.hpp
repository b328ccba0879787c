#pragma once

// Eigen-decomposition of single-excitation Hamiltonians into distinct
// eigenvalues and orthogonal projectors onto the eigenspaces.

#include <cstddef>
#include <optional>
#include <vector>

#include "spinitf/network.hpp"
#include "spinitf/types.hpp"

namespace spinitf {

enum class SpectrumSource { analytic_ring, analytic_chain, numeric };

inline const char* to_string(SpectrumSource s) {
  switch (s) {
    case SpectrumSource::analytic_ring: return "analytic_ring";
    case SpectrumSource::analytic_chain: return "analytic_chain";
    default: return "numeric";
  }
}

/// Closed form lambda = 2 cos(pi * numerator / denominator) + shift, kept for
/// analytic spectra so frequencies can be re-evaluated in HighReal.
struct CosineForm {
  long numerator = 0;
  long denominator = 1;
  double shift = 0.0;

  HighReal evaluate() const;
};

struct EigenSystem {
  std::vector<double> values;       ///< distinct eigenvalues, ascending
  std::vector<Matrix> projectors;   ///< real symmetric projector per value
  std::vector<int> multiplicities;
  SpectrumSource source = SpectrumSource::numeric;
  /// Present for analytic sources, parallel to `values`.
  std::optional<std::vector<CosineForm>> exact;

  std::size_t dimension() const {
    return projectors.empty() ? 0 : static_cast<std::size_t>(projectors.front().rows());
  }
  std::size_t distinct_count() const { return values.size(); }

  /// Eigenvalue k in HighReal: exact form when available, else the double.
  HighReal high_precision_value(std::size_t k) const;
};

/// Analytic circulant spectrum: lambda_k = 2cos(2 pi k / n) (+1 Heisenberg),
/// conjugate eigenvector pairs combined into real projectors.
EigenSystem ring_eigensystem(std::size_t n, CouplingKind kind = CouplingKind::xx);

/// Analytic open-chain spectrum: lambda_k = 2cos(pi k / (n + 1)) + shift,
/// eigenvectors sqrt(2/(n+1)) sin(pi k i / (n + 1)).
EigenSystem chain_eigensystem(std::size_t n, double shift = 0.0);

struct JacobiOptions {
  /// Eigenvalues closer than this are merged. Defaults to 1e-9 * max|lambda|.
  std::optional<double> cluster_tol;
  int max_sweeps = 100;
};

/// Cyclic Jacobi diagonalization followed by clustering of nearly equal
/// eigenvalues. Throws ContractViolation for non-symmetric input and
/// ConvergenceError when max_sweeps is exhausted.
EigenSystem numeric_eigensystem(const Matrix& h, const JacobiOptions& options = {});

inline EigenSystem numeric_eigensystem(const SingleExcitationHamiltonian& h,
                                       const JacobiOptions& options = {}) {
  return numeric_eigensystem(h.matrix, options);
}

/// Picks the analytic solver when the structure tag allows it.
EigenSystem eigensystem(const SpinNetwork& net, const JacobiOptions& options = {});

/// Full eigendecomposition (values ascending, eigenvectors in columns) from
/// the Jacobi sweeps, before clustering.
struct Diagonalization {
  Vector values;
  Matrix vectors;
  int sweeps = 0;
};
Diagonalization jacobi_diagonalize(const Matrix& h, int max_sweeps = 100);

/// Distinct eigenvalues of C_n and C_{n-1} interleave:
/// a_0 >= b_0 >= a_1 >= b_1 >= ... with both lists descending.
bool interlacing_check(std::size_t n);

}  // namespace spinitf
