#include "spinitf/timing.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace spinitf {

double transfer_probability_hp(const EigenSystem& es, std::size_t i, std::size_t j,
                               const HighReal& t) {
  const std::size_t n = es.dimension();
  if (i >= n || j >= n) throw IndexError("node index out of range");
  const HighReal two_pi = 2 * high_pi();
  std::complex<double> amp{0.0, 0.0};
  const auto r = static_cast<Eigen::Index>(i);
  const auto c = static_cast<Eigen::Index>(j);
  for (std::size_t k = 0; k < es.distinct_count(); ++k) {
    HighReal phase = es.high_precision_value(k) * t;
    phase -= two_pi * floor(phase / two_pi);
    amp += es.projectors[k](r, c) * std::polar(1.0, -static_cast<double>(phase));
  }
  return std::norm(amp);
}

TimeEstimate time_from_solution(const ConstraintSystem& cs, const EigenSystem& es,
                                const DiophantineSolution& sol) {
  if (sol.p.size() != cs.n_bar()) throw ContractViolation("solution does not match constraints");
  if (sol.q < 1) throw ContractViolation("solution denominator must be >= 1");
  for (std::size_t k = 0; k < cs.n_bar(); ++k) {
    const bool odd = (sol.p[k] % 2) != 0;
    if (odd != (cs.parity_rhs[k] == 1)) {
      throw ContractViolation("solution violates the parity constraints");
    }
  }
  TimeEstimate est;
  est.t_f_hp = 2 * HighReal(sol.q) / abs(cs.omega_ref);
  est.t_f = static_cast<double>(est.t_f_hp);
  est.p_max = analyze_transfer(es, cs.source, cs.target).p_max;
  est.achieved_p = transfer_probability_hp(es, cs.source, cs.target, est.t_f_hp);
  est.relative_gap = 1.0 - est.achieved_p / est.p_max;
  return est;
}

bool error_bound_check(std::size_t live_count, std::size_t n_bar, double max_error,
                       double eps_prob) {
  if (!(eps_prob > 0.0 && eps_prob < 1.0)) throw ArgumentError("eps_prob must lie in (0, 1)");
  if (!(max_error >= 0.0)) throw ArgumentError("max_error must be non-negative");
  const double lhs = 2.0 * static_cast<double>(live_count) *
                     std::abs(std::sin(std::numbers::pi / 2.0 * static_cast<double>(n_bar) *
                                       max_error));
  return lhs < eps_prob / 2.0;
}

bool error_bound_check(const ConstraintSystem& cs, double max_error, double eps_prob) {
  return error_bound_check(cs.live_count(), cs.n_bar(), max_error, eps_prob);
}

QMinBound q_min_dirichlet(std::size_t live_count, std::size_t n_bar, double eps_prob) {
  if (live_count == 0 || n_bar == 0) throw ArgumentError("empty constraint system");
  const double upper = 4.0 * static_cast<double>(live_count);
  if (!(eps_prob > 0.0 && eps_prob <= upper)) {
    throw ArgumentError("eps_prob must lie in (0, 4|K'|]");
  }
  const HighReal nb(static_cast<long>(n_bar));
  const HighReal arg = HighReal(eps_prob) / HighReal(upper);
  QMinBound out;
  out.value = pow(high_pi() * nb / asin(arg), static_cast<int>(n_bar));
  out.q_min = static_cast<BigInt>(ceil(out.value));
  out.small_angle = pow(4 * high_pi() * nb * HighReal(static_cast<long>(live_count)) /
                            HighReal(eps_prob),
                        static_cast<int>(n_bar));
  return out;
}

QMinBound q_min_dirichlet(const ConstraintSystem& cs, double eps_prob) {
  return q_min_dirichlet(cs.live_count(), cs.n_bar(), eps_prob);
}

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& samples) {
  if (samples.size() < 2) throw ArgumentError("power-law fit needs at least two samples");
  const double m = static_cast<double>(samples.size());
  double sx = 0, sy = 0;
  for (const auto& [eps, t] : samples) {
    if (!(eps > 0.0) || !(t > 0.0)) throw ArgumentError("samples must be positive");
    sx += std::log(eps);
    sy += std::log(t);
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [eps, t] : samples) {
    const double dx = std::log(eps) - mx, dy = std::log(t) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) throw ArgumentError("degenerate fit: all eps values are equal");
  const double slope = sxy / sxx;
  PowerLawFit fit;
  fit.alpha = -slope;
  fit.c = std::exp(my - slope * mx);
  const double ss_res = syy - slope * sxy;
  fit.r_squared = syy > 0.0 ? 1.0 - std::max(ss_res, 0.0) / syy : 1.0;
  return fit;
}

std::vector<std::pair<double, double>> minimum_time_samples(const EigenSystem& es,
                                                            std::size_t i, std::size_t j,
                                                            const std::vector<double>& eps,
                                                            double t_max, double dt) {
  const std::vector<double> coarse = earliest_times(es, i, j, eps, t_max, dt);
  const double p_max = analyze_transfer(es, i, j).p_max;
  std::vector<std::pair<double, double>> out;
  for (std::size_t e = 0; e < eps.size(); ++e) {
    const double t = coarse[e];
    if (std::isnan(t) || t <= 0.0) continue;
    const double target = p_max - eps[e];
    double lo = t - dt, hi = t;
    for (int it = 0; it < 40; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (transfer_probability(es, i, j, mid) >= target) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.emplace_back(eps[e], hi);
  }
  return out;
}

std::vector<double> log_grid(double first, double last, std::size_t count) {
  if (!(first > 0.0) || !(last > 0.0)) throw ArgumentError("log grid bounds must be positive");
  if (count < 2) return {first};
  std::vector<double> out;
  const double a = std::log(first), b = std::log(last);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(std::exp(a + (b - a) * static_cast<double>(k) / static_cast<double>(count - 1)));
  }
  return out;
}

DecoherenceReport decoherence_feasibility(double c, double alpha, double t_coh,
                                          const ConstraintSystem* cs) {
  if (!(c > 0.0) || !(alpha > 0.0) || !(t_coh > 0.0)) {
    throw ArgumentError("c, alpha and t_coh must be positive");
  }
  DecoherenceReport out;
  out.eps_floor = std::pow(c / t_coh, 1.0 / alpha);
  if (cs != nullptr && cs->n_bar() > 0) {
    const HighReal arg =
        HighReal(out.eps_floor) / HighReal(4 * static_cast<long>(cs->live_count()));
    if (arg > 0 && arg <= 1) {
      const HighReal nb(static_cast<long>(cs->n_bar()));
      const HighReal t = 2 / abs(cs->omega_ref) *
                         pow(high_pi() * nb / asin(arg), static_cast<int>(cs->n_bar()));
      out.t_ceiling = t;
      out.log10_t_ceiling = static_cast<double>(log10(t));
    }
  }
  return out;
}

}  // namespace spinitf
