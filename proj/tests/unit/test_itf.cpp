#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "spinitf/itf.hpp"

using namespace spinitf;

TEST_CASE("N=9 ring has the two printed p_max values") {
  const Matrix p = pmax_matrix(ring_eigensystem(9));
  CHECK(p(0, 1) == doctest::Approx(0.4094).epsilon(5e-5 / 0.4094));
  CHECK(p(0, 3) == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
  CHECK(p(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("closed form matches the projector computation") {
  for (std::size_t n = 3; n <= 20; ++n) {
    const Matrix p = pmax_matrix(ring_eigensystem(n));
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(std::abs(p(0, static_cast<Eigen::Index>(j)) -
                     ring_pmax_closed_form(n, static_cast<long>(j))) < 1e-12);
    }
  }
}

TEST_CASE("p_max agrees with an independent eigendecomposition") {
  const SpinNetwork net = apply_bias(build_ring(7), 2, 0.7);
  const Matrix h = single_excitation_hamiltonian(net).matrix;
  const Matrix p = pmax_matrix(eigensystem(net));
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      CHECK(std::abs(p(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) -
                     oracle::pmax(h, i, j)) < 1e-9);
    }
  }
}

TEST_CASE("p_t matches the matrix exponential") {
  const SpinNetwork net = build_ring(6);
  const Matrix h = single_excitation_hamiltonian(net).matrix;
  const EigenSystem es = eigensystem(net);
  for (double t : {0.0, 0.3, 1.7, 12.5}) {
    CHECK(std::abs(transfer_probability(es, 0, 2, t) - oracle::transfer_probability(h, 0, 2, t)) < 1e-10);
  }
}

TEST_CASE("sign factors of the N=7 example") {
  const EigenSystem es = ring_eigensystem(7);
  const TransferAnalysis ta = analyze_transfer(es, 0, 2);
  // Stored ascending; the largest eigenvalue is last.
  CHECK(ta.overlaps[3] == doctest::Approx(1.0 / 7.0));
  CHECK(ta.overlaps[2] == doctest::Approx(-0.063577).epsilon(1e-4));
  CHECK(ta.overlaps[1] == doctest::Approx(-0.257420).epsilon(1e-4));
  CHECK(ta.overlaps[0] == doctest::Approx(0.178140).epsilon(1e-4));
  CHECK(ta.signs == std::vector<int>{1, -1, -1, 1});
  CHECK(ta.live.size() == 4);
  CHECK(ta.p_max == doctest::Approx(0.4121565).epsilon(1e-6));
}

TEST_CASE("dark states") {
  CHECK(dark_states(ring_eigensystem(8), 0, 2).size() == 2);
  CHECK(dark_states(chain_eigensystem(5), 2, 0).size() == 2);
  CHECK(dark_states(ring_eigensystem(7), 0, 1).empty());
}

TEST_CASE("index errors") {
  CHECK_THROWS_AS(analyze_transfer(ring_eigensystem(5), 0, 5), IndexError);
  CHECK_THROWS_AS(transfer_probability(ring_eigensystem(5), 7, 0, 1.0), IndexError);
}

TEST_CASE("scan finds near-maximal transfer on N=5") {
  const EigenSystem es = ring_eigensystem(5);
  const double pm = analyze_transfer(es, 0, 1).p_max;
  const ScanResult r = scan_max_probability(es, 0, 1, 100.0);
  CHECK(r.p_best <= pm + 1e-12);
  CHECK(r.p_best >= 0.9999 * pm);
  CHECK_THROWS_AS(scan_max_probability(es, 0, 1, 0.001, 0.01), ArgumentError);
}

TEST_CASE("earliest times are monotone in eps") {
  const EigenSystem es = ring_eigensystem(5);
  const std::vector<double> t = earliest_times(es, 0, 1, {1e-1, 1e-2, 1e-3}, 500.0);
  CHECK(t[0] <= t[1]);
  CHECK(t[1] <= t[2]);
  const std::vector<double> never = earliest_times(es, 0, 1, {1e-9}, 1.0);
  CHECK(std::isnan(never[0]));
}

TEST_CASE("simulate samples the grid") {
  const auto s = simulate(ring_eigensystem(4), 0, 1, 1.0, 0.25);
  REQUIRE(s.size() == 5);
  CHECK(s[0].second == doctest::Approx(0.0));
  CHECK(s[4].first == doctest::Approx(1.0));
}
