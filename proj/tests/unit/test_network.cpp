#include <doctest.h>

#include "spinitf/network.hpp"

using namespace spinitf;

TEST_CASE("ring couplings close the loop") {
  const SpinNetwork net = build_ring(5);
  CHECK(net.size() == 5);
  CHECK(net.couplings()(0, 4) == 1.0);
  CHECK(net.couplings()(0, 1) == 1.0);
  CHECK(net.couplings()(0, 2) == 0.0);
  CHECK(net.topology() == Topology::ring);
  CHECK(net.uniform_unbiased());
}

TEST_CASE("chain has open ends") {
  const SpinNetwork net = build_chain(4);
  CHECK(net.couplings()(0, 3) == 0.0);
  CHECK(net.couplings()(2, 3) == 1.0);
}

TEST_CASE("invalid sizes are rejected") {
  CHECK_THROWS_AS(build_ring(2), InvalidTopology);
  CHECK_THROWS_AS(build_chain(1), InvalidTopology);
}

TEST_CASE("constructor validates couplings") {
  Matrix j = Matrix::Zero(3, 3);
  j(0, 1) = 1.0;
  CHECK_THROWS_AS(SpinNetwork(j, CouplingKind::xx, Vector::Zero(3)), InvalidTopology);
  j(1, 0) = 1.0;
  CHECK_NOTHROW(SpinNetwork(j, CouplingKind::xx, Vector::Zero(3)));
  j(2, 2) = 0.5;
  CHECK_THROWS(SpinNetwork(j, CouplingKind::xx, Vector::Zero(3)));
  CHECK_THROWS(SpinNetwork(Matrix::Zero(3, 3), CouplingKind::xx, Vector::Zero(2)));
}

TEST_CASE("bias lands on the diagonal and breaks the ring tag") {
  const SpinNetwork net = apply_bias(build_ring(6), 2, 3.5);
  const SingleExcitationHamiltonian h = single_excitation_hamiltonian(net);
  CHECK(h.matrix(2, 2) == 3.5);
  CHECK(h.structure_tag == StructureTag::general);
  CHECK_THROWS_AS(apply_bias(build_ring(6), 6, 1.0), IndexError);
}

TEST_CASE("structure tags") {
  CHECK(single_excitation_hamiltonian(build_ring(7)).structure_tag == StructureTag::circulant_ring);
  CHECK(single_excitation_hamiltonian(build_chain(7)).structure_tag == StructureTag::toeplitz_chain);
  CHECK(single_excitation_hamiltonian(build_chain(7, CouplingKind::heisenberg)).structure_tag ==
        StructureTag::general);
}

TEST_CASE("heisenberg ring differs from xx by the identity") {
  for (std::size_t n : {3u, 5u, 8u}) {
    const Matrix xx = single_excitation_hamiltonian(build_ring(n)).matrix;
    const SingleExcitationHamiltonian h = single_excitation_hamiltonian(build_ring(n, CouplingKind::heisenberg));
    CHECK((h.matrix - xx).isApprox(Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))));
    CHECK(h.heisenberg_shift == 1.0);
  }
}

TEST_CASE("rotate_labels is a ring translation") {
  const SpinNetwork biased = apply_bias(build_ring(9), 6, 2.0);
  const SpinNetwork moved = rotate_labels(biased, 2);
  CHECK(moved.bias()(8) == 2.0);
  CHECK(moved.couplings().isApprox(biased.couplings()));
  const SpinNetwork back = rotate_labels(moved, -2);
  CHECK(back.bias().isApprox(biased.bias()));
}
