#pragma once

// Spin-network descriptions and their single-excitation Hamiltonians.
//
// Off-diagonal Hamiltonian entries are the couplings J_ij themselves, so a
// uniform ring with J = 1 gives the circulant adjacency matrix C_N and the
// spectrum 2cos(2 pi k / N). Time is measured in units of 1/J throughout.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "spinitf/types.hpp"

namespace spinitf {

enum class Topology { ring, chain, custom };

enum class StructureTag { circulant_ring, toeplitz_chain, general };

inline const char* to_string(StructureTag t) {
  switch (t) {
    case StructureTag::circulant_ring: return "circulant_ring";
    case StructureTag::toeplitz_chain: return "toeplitz_chain";
    default: return "general";
  }
}

/// Immutable description of a network of N spins with pairwise couplings,
/// a coupling kind and a static per-node bias field (units of J).
class SpinNetwork {
 public:
  /// Validates: N >= 2, square symmetric couplings with zero diagonal,
  /// finite bias of length N.
  SpinNetwork(Matrix couplings, CouplingKind kind, Vector bias,
              Topology topology = Topology::custom);

  std::size_t size() const { return static_cast<std::size_t>(couplings_.rows()); }
  const Matrix& couplings() const { return couplings_; }
  CouplingKind kind() const { return kind_; }
  const Vector& bias() const { return bias_; }
  Topology topology() const { return topology_; }

  /// True when every nonzero coupling equals 1 and the bias is zero.
  bool uniform_unbiased() const;

 private:
  Matrix couplings_;
  CouplingKind kind_;
  Vector bias_;
  Topology topology_;
};

struct SingleExcitationHamiltonian {
  Matrix matrix;
  StructureTag structure_tag = StructureTag::general;
  /// Constant diagonal shift applied for Heisenberg coupling (0 for XX).
  double heisenberg_shift = 0.0;
};

/// Uniform nearest-neighbour ring with the (N,1) wrap-around coupling.
/// Throws InvalidTopology for n < 3.
SpinNetwork build_ring(std::size_t n, CouplingKind kind = CouplingKind::xx);

/// Uniform open chain of n spins. Throws InvalidTopology for n < 2.
SpinNetwork build_chain(std::size_t n, CouplingKind kind = CouplingKind::xx);

/// Returns a copy with bias[node] += zeta (node is 0-based).
SpinNetwork apply_bias(const SpinNetwork& net, std::size_t node, double zeta);

/// Relabels nodes by a ring rotation: node i moves to (i + offset) mod N.
SpinNetwork rotate_labels(const SpinNetwork& net, std::ptrdiff_t offset);

/// N x N matrix in the basis |i> = e_i. Heisenberg coupling adds the constant
/// shift documented in heisenberg_diagonal().
SingleExcitationHamiltonian single_excitation_hamiltonian(const SpinNetwork& net);

/// Diagonal contribution of Heisenberg coupling in the single-excitation
/// sector. For uniform rings this is the constant +1 shift of the spectrum;
/// for general graphs each node receives (row sum of J) / 2, which reduces to
/// the ring value when every node has two unit couplings.
Vector heisenberg_diagonal(const Matrix& couplings);

}  // namespace spinitf
