#pragma once

// Transfer times from Diophantine solutions, a-priori accuracy bounds, and
// empirical time-versus-error power laws.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "spinitf/attainability.hpp"
#include "spinitf/diophantine.hpp"

namespace spinitf {

struct TimeEstimate {
  double t_f = 0.0;  ///< units of 1/J
  HighReal t_f_hp;
  double achieved_p = 0.0;
  double p_max = 0.0;
  double relative_gap = 0.0;  ///< 1 - achieved_p / p_max
};

/// t_f = 2q / |omega_mn|, with p_t evaluated at t_f using phases reduced in
/// HighReal. Throws ContractViolation for parity-infeasible solutions or a
/// dimension mismatch.
TimeEstimate time_from_solution(const ConstraintSystem& cs, const EigenSystem& es,
                                const DiophantineSolution& sol);

/// p_t(i,j) with each phase lambda_k t reduced modulo 2 pi in HighReal.
double transfer_probability_hp(const EigenSystem& es, std::size_t i, std::size_t j,
                               const HighReal& t);

/// 2 |K'| |sin(pi/2 * N * max_error)| < eps_prob / 2.
bool error_bound_check(std::size_t live_count, std::size_t n_bar, double max_error,
                       double eps_prob);
bool error_bound_check(const ConstraintSystem& cs, double max_error, double eps_prob);

struct QMinBound {
  BigInt q_min;              ///< ceil((pi N / asin(eps / (4|K'|)))^N)
  HighReal value;            ///< the same before rounding up
  HighReal small_angle;      ///< (4 pi N |K'| / eps)^N
};

/// Requires 0 < eps_prob <= 4|K'|.
QMinBound q_min_dirichlet(std::size_t live_count, std::size_t n_bar, double eps_prob);
QMinBound q_min_dirichlet(const ConstraintSystem& cs, double eps_prob);

struct PowerLawFit {
  double c = 0.0;
  double alpha = 0.0;
  double r_squared = 0.0;
};

/// Least squares on log t = log c - alpha log eps. Two samples interpolate.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& samples);

/// (eps, t) pairs: earliest grid time with p_t >= p_max - eps, refined by
/// bisection inside the last grid step. Unreached eps values are dropped.
std::vector<std::pair<double, double>> minimum_time_samples(const EigenSystem& es,
                                                            std::size_t i, std::size_t j,
                                                            const std::vector<double>& eps,
                                                            double t_max, double dt = 0.01);

/// Geometric grid of `count` values from `first` to `last` inclusive.
std::vector<double> log_grid(double first, double last, std::size_t count);

struct DecoherenceReport {
  double eps_floor = 0.0;  ///< (c / t_coh)^(1/alpha)
  /// (2/|omega_mn|) (pi N / asin(eps_floor / (4|K'|)))^N when a constraint
  /// system is supplied and the arcsine is defined.
  std::optional<HighReal> t_ceiling;
  std::optional<double> log10_t_ceiling;
};

DecoherenceReport decoherence_feasibility(double c, double alpha, double t_coh,
                                          const ConstraintSystem* cs = nullptr);

}  // namespace spinitf
