#include "spinitf/network.hpp"

#include <cmath>
#include <string>

namespace spinitf {

SpinNetwork::SpinNetwork(Matrix couplings, CouplingKind kind, Vector bias, Topology topology)
    : couplings_(std::move(couplings)), kind_(kind), bias_(std::move(bias)), topology_(topology) {
  const auto n = couplings_.rows();
  if (n != couplings_.cols()) {
    throw InvalidTopology("coupling matrix must be square");
  }
  if (n < 2) {
    throw InvalidTopology("a spin network needs at least 2 spins");
  }
  if (bias_.size() != n) {
    throw InvalidTopology("bias vector length " + std::to_string(bias_.size()) +
                          " does not match N = " + std::to_string(n));
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (couplings_(i, i) != 0.0) {
      throw InvalidTopology("couplings must have zero diagonal");
    }
    if (!std::isfinite(bias_(i))) {
      throw InvalidTopology("bias entries must be finite");
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (couplings_(i, j) != couplings_(j, i)) {
        throw InvalidTopology("couplings must be symmetric");
      }
      if (!std::isfinite(couplings_(i, j))) {
        throw InvalidTopology("couplings must be finite");
      }
    }
  }
}

bool SpinNetwork::uniform_unbiased() const {
  if (!bias_.isZero(0.0)) return false;
  for (Eigen::Index i = 0; i < couplings_.rows(); ++i) {
    for (Eigen::Index j = 0; j < couplings_.cols(); ++j) {
      const double v = couplings_(i, j);
      if (v != 0.0 && v != 1.0) return false;
    }
  }
  return true;
}

SpinNetwork build_ring(std::size_t n, CouplingKind kind) {
  if (n < 3) {
    throw InvalidTopology("a ring needs at least 3 spins, got " + std::to_string(n));
  }
  const auto m = static_cast<Eigen::Index>(n);
  Matrix j = Matrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index next = (i + 1) % m;
    j(i, next) = 1.0;
    j(next, i) = 1.0;
  }
  return SpinNetwork(std::move(j), kind, Vector::Zero(m), Topology::ring);
}

SpinNetwork build_chain(std::size_t n, CouplingKind kind) {
  if (n < 2) {
    throw InvalidTopology("a chain needs at least 2 spins, got " + std::to_string(n));
  }
  const auto m = static_cast<Eigen::Index>(n);
  Matrix j = Matrix::Zero(m, m);
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    j(i, i + 1) = 1.0;
    j(i + 1, i) = 1.0;
  }
  return SpinNetwork(std::move(j), kind, Vector::Zero(m), Topology::chain);
}

SpinNetwork apply_bias(const SpinNetwork& net, std::size_t node, double zeta) {
  if (node >= net.size()) {
    throw IndexError("bias node " + std::to_string(node) + " out of range for N = " +
                     std::to_string(net.size()));
  }
  Vector bias = net.bias();
  bias(static_cast<Eigen::Index>(node)) += zeta;
  return SpinNetwork(net.couplings(), net.kind(), std::move(bias), net.topology());
}

SpinNetwork rotate_labels(const SpinNetwork& net, std::ptrdiff_t offset) {
  const auto n = static_cast<std::ptrdiff_t>(net.size());
  const auto shift = [&](std::ptrdiff_t i) { return ((i + offset) % n + n) % n; };
  Matrix j(n, n);
  Vector b(n);
  for (std::ptrdiff_t a = 0; a < n; ++a) {
    b(shift(a)) = net.bias()(a);
    for (std::ptrdiff_t c = 0; c < n; ++c) {
      j(shift(a), shift(c)) = net.couplings()(a, c);
    }
  }
  return SpinNetwork(std::move(j), net.kind(), std::move(b), net.topology());
}

Vector heisenberg_diagonal(const Matrix& couplings) {
  return couplings.rowwise().sum() / 2.0;
}

SingleExcitationHamiltonian single_excitation_hamiltonian(const SpinNetwork& net) {
  SingleExcitationHamiltonian h;
  h.matrix = net.couplings();
  h.matrix.diagonal() += net.bias();
  if (net.kind() == CouplingKind::heisenberg) {
    const Vector shift = heisenberg_diagonal(net.couplings());
    h.matrix.diagonal() += shift;
    if ((shift.array() == shift(0)).all()) h.heisenberg_shift = shift(0);
  }

  const bool plain = net.uniform_unbiased() &&
                     (net.kind() == CouplingKind::xx || h.heisenberg_shift != 0.0);
  if (plain && net.topology() == Topology::ring) {
    h.structure_tag = StructureTag::circulant_ring;
  } else if (plain && net.topology() == Topology::chain) {
    h.structure_tag = StructureTag::toeplitz_chain;
  } else {
    h.structure_tag = StructureTag::general;
  }
  return h;
}

}  // namespace spinitf
