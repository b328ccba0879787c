#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "spinitf/spectra.hpp"

using namespace spinitf;

namespace {

// Eigenvalues with multiplicity, ascending.
std::vector<double> expand(const EigenSystem& es) {
  std::vector<double> out;
  for (std::size_t k = 0; k < es.values.size(); ++k) {
    out.insert(out.end(), static_cast<std::size_t>(es.multiplicities[k]), es.values[k]);
  }
  return out;
}

double projector_error(const EigenSystem& es) {
  const auto n = static_cast<Eigen::Index>(es.dimension());
  Matrix sum = Matrix::Zero(n, n);
  double worst = 0.0;
  for (std::size_t k = 0; k < es.projectors.size(); ++k) {
    const Matrix& p = es.projectors[k];
    sum += p;
    worst = std::max(worst, (p * p - p).cwiseAbs().maxCoeff());
    worst = std::max(worst, std::abs(p.trace() - es.multiplicities[k]));
  }
  worst = std::max(worst, (sum - Matrix::Identity(n, n)).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace

TEST_CASE("ring spectrum for N=5") {
  const EigenSystem es = ring_eigensystem(5);
  REQUIRE(es.values.size() == 3);
  CHECK(es.values[2] == doctest::Approx(2.0));
  CHECK(es.values[1] == doctest::Approx(0.6180339887498949));
  CHECK(es.values[0] == doctest::Approx(-1.618033988749895));
  CHECK(es.multiplicities == std::vector<int>{2, 2, 1});
  CHECK(es.source == SpectrumSource::analytic_ring);
}

TEST_CASE("even ring has two simple eigenvalues") {
  const EigenSystem es = ring_eigensystem(6);
  CHECK(es.values.size() == 4);
  CHECK(es.multiplicities.front() == 1);
  CHECK(es.multiplicities.back() == 1);
}

TEST_CASE("heisenberg ring shifts by one") {
  const EigenSystem xx = ring_eigensystem(7);
  const EigenSystem hz = ring_eigensystem(7, CouplingKind::heisenberg);
  for (std::size_t k = 0; k < xx.values.size(); ++k) {
    CHECK(hz.values[k] == doctest::Approx(xx.values[k] + 1.0));
  }
}

TEST_CASE("chain spectrum") {
  const EigenSystem es = chain_eigensystem(4);
  REQUIRE(es.values.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) {
    const double expected = 2.0 * std::cos(std::numbers::pi * static_cast<double>(4 - k) / 5.0);
    CHECK(es.values[k] == doctest::Approx(expected));
  }
}

TEST_CASE("exact forms agree with the double eigenvalues") {
  for (std::size_t n : {5u, 8u, 13u}) {
    const EigenSystem r = ring_eigensystem(n);
    const EigenSystem c = chain_eigensystem(n);
    for (std::size_t k = 0; k < r.values.size(); ++k) {
      CHECK(static_cast<double>(r.high_precision_value(k)) == doctest::Approx(r.values[k]).epsilon(1e-14));
    }
    for (std::size_t k = 0; k < c.values.size(); ++k) {
      CHECK(static_cast<double>(c.high_precision_value(k)) == doctest::Approx(c.values[k]).epsilon(1e-14));
    }
  }
}

TEST_CASE("analytic and numeric solvers agree with the Eigen oracle") {
  for (std::size_t n = 3; n <= 16; ++n) {
    const Matrix h = single_excitation_hamiltonian(build_ring(n)).matrix;
    const Eigen::VectorXd ref = oracle::eigenvalues(h);
    const std::vector<double> analytic = expand(ring_eigensystem(n));
    const std::vector<double> numeric = expand(numeric_eigensystem(h));
    REQUIRE(analytic.size() == n);
    REQUIRE(numeric.size() == n);
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(std::abs(analytic[k] - ref(static_cast<Eigen::Index>(k))) < 1e-10);
      CHECK(std::abs(numeric[k] - ref(static_cast<Eigen::Index>(k))) < 1e-10);
    }
  }
}

TEST_CASE("projectors are orthogonal idempotents summing to identity") {
  CHECK(projector_error(ring_eigensystem(9)) < 1e-12);
  CHECK(projector_error(ring_eigensystem(10)) < 1e-12);
  CHECK(projector_error(chain_eigensystem(8)) < 1e-12);
  CHECK(projector_error(numeric_eigensystem(single_excitation_hamiltonian(
            apply_bias(build_ring(7), 3, 2.5)))) < 1e-10);
}

TEST_CASE("projectors reproduce the Hamiltonian") {
  const Matrix h = single_excitation_hamiltonian(build_ring(8)).matrix;
  const EigenSystem es = ring_eigensystem(8);
  Matrix rebuilt = Matrix::Zero(8, 8);
  for (std::size_t k = 0; k < es.values.size(); ++k) rebuilt += es.values[k] * es.projectors[k];
  CHECK((rebuilt - h).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("eigensystem dispatch") {
  CHECK(eigensystem(build_ring(6)).source == SpectrumSource::analytic_ring);
  CHECK(eigensystem(build_chain(6)).source == SpectrumSource::analytic_chain);
  CHECK(eigensystem(apply_bias(build_ring(6), 0, 1.0)).source == SpectrumSource::numeric);
}

TEST_CASE("jacobi rejects non-symmetric input") {
  Matrix a = Matrix::Zero(3, 3);
  a(0, 1) = 1.0;
  CHECK_THROWS_AS(numeric_eigensystem(a), ContractViolation);
}

TEST_CASE("jacobi on a diagonal matrix needs no sweeps") {
  Matrix a = Matrix::Zero(3, 3);
  a.diagonal() << 3.0, 1.0, 2.0;
  const Diagonalization d = jacobi_diagonalize(a);
  CHECK(d.sweeps == 0);
  CHECK(d.values(0) == 1.0);
  CHECK(d.values(2) == 3.0);
}

TEST_CASE("distinct ring eigenvalues interlace") {
  CHECK(interlacing_check(5));
  CHECK(interlacing_check(6));
  CHECK(interlacing_check(12));
  for (std::size_t n = 4; n <= 30; ++n) CHECK(interlacing_check(n));
  CHECK_THROWS_AS(interlacing_check(3), ArgumentError);
}
