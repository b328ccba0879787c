#pragma once

// Information transfer fidelity: the time-independent bound
//   p_max(i,j) = (sum_k |<i|Pi_k|j>|)^2
// on p_t(i,j) = |<i| exp(-i H t) |j>|^2, plus sign factors, dark states and
// time-domain evaluation of p_t through the spectral decomposition.

#include <cstddef>
#include <vector>

#include "spinitf/spectra.hpp"

namespace spinitf {

inline constexpr double kDefaultDarkTol = 1e-10;

struct TransferAnalysis {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<double> overlaps;   ///< <i|Pi_k|j> per distinct eigenspace
  std::vector<int> signs;         ///< -1, 0 or +1
  std::vector<std::size_t> live;  ///< indices with nonzero sign
  double p_max = 0.0;
};

TransferAnalysis analyze_transfer(const EigenSystem& es, std::size_t i, std::size_t j,
                                  double dark_tol = kDefaultDarkTol);

/// Eigenspace indices with |<i|Pi_k|j>| < dark_tol.
std::vector<std::size_t> dark_states(const EigenSystem& es, std::size_t i, std::size_t j,
                                     double dark_tol = kDefaultDarkTol);

/// Full N x N matrix of p_max values.
Matrix pmax_matrix(const EigenSystem& es, double dark_tol = kDefaultDarkTol);

/// p_max for a uniform ring from the closed cosine sum, gap = (i - j) mod n.
double ring_pmax_closed_form(std::size_t n, long gap);

double transfer_probability(const EigenSystem& es, std::size_t i, std::size_t j, double t);

struct ScanResult {
  double t_best = 0.0;
  double p_best = 0.0;
};

/// Grid scan of p_t over [0, t_max] with step dt, then golden-section
/// refinement (50 iterations) on the bracket around the best grid point.
ScanResult scan_max_probability(const EigenSystem& es, std::size_t i, std::size_t j,
                                double t_max, double dt = 0.01);

/// Earliest grid time at which p_t >= p_max - eps, for every eps in `eps`.
/// Entries that are never reached within t_max are NaN.
std::vector<double> earliest_times(const EigenSystem& es, std::size_t i, std::size_t j,
                                   const std::vector<double>& eps, double t_max, double dt = 0.01);

/// (t, p_t) samples on a uniform grid, for plotting.
std::vector<std::pair<double, double>> simulate(const EigenSystem& es, std::size_t i,
                                                std::size_t j, double t_max, double dt);

}  // namespace spinitf
