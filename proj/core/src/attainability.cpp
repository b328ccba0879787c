#include "spinitf/attainability.hpp"

#include <algorithm>
#include <cmath>

#include "spinitf/lattice.hpp"

namespace spinitf {

std::vector<double> ConstraintSystem::theta_double() const {
  std::vector<double> out;
  out.reserve(theta.size());
  for (const HighReal& t : theta) out.push_back(static_cast<double>(t));
  return out;
}

HighReal transition_frequency(const EigenSystem& es, std::size_t k, std::size_t l) {
  return (es.high_precision_value(k) - es.high_precision_value(l)) / high_pi();
}

int pair_parity(int s_k, int s_l) {
  const int half = (s_k - s_l) / 2;
  return ((half % 2) + 2) % 2;
}

ConstraintSystem build_constraints(const TransferAnalysis& ta, const EigenSystem& es) {
  if (ta.live.size() < 3) {
    throw UnsupportedCase("attainability needs at least three live eigenspaces, found " +
                          std::to_string(ta.live.size()));
  }
  ConstraintSystem cs;
  cs.source = ta.source;
  cs.target = ta.target;
  cs.live.assign(ta.live.rbegin(), ta.live.rend());
  const auto sign = [&](std::size_t k) { return ta.signs[k]; };

  bool adjacent_equal = false;
  for (std::size_t r = 0; r + 1 < cs.live.size(); ++r) {
    if (sign(cs.live[r]) == sign(cs.live[r + 1])) adjacent_equal = true;
  }
  if (!adjacent_equal) {
    // Move the partner of the widest equal-sign pair next to its mate.
    std::size_t best_a = 0, best_b = 0;
    HighReal widest = -1;
    for (std::size_t a = 0; a < cs.live.size(); ++a) {
      for (std::size_t b = a + 2; b < cs.live.size(); ++b) {
        if (sign(cs.live[a]) != sign(cs.live[b])) continue;
        const HighReal w = abs(transition_frequency(es, cs.live[a], cs.live[b]));
        if (w > widest) {
          widest = w;
          best_a = a;
          best_b = b;
        }
      }
    }
    const std::size_t moved = cs.live[best_b];
    cs.live.erase(cs.live.begin() + static_cast<std::ptrdiff_t>(best_b));
    cs.live.insert(cs.live.begin() + static_cast<std::ptrdiff_t>(best_a) + 1, moved);
    cs.reordered = true;
  }
  for (std::size_t k : cs.live) cs.live_signs.push_back(sign(k));

  for (std::size_t r = 0; r + 1 < cs.live.size(); ++r) {
    cs.pairs.emplace_back(cs.live[r], cs.live[r + 1]);
    cs.frequencies_hp.push_back(transition_frequency(es, cs.live[r], cs.live[r + 1]));
    cs.frequencies.push_back(static_cast<double>(cs.frequencies_hp.back()));
  }

  bool found = false;
  for (std::size_t r = 0; r < cs.pairs.size(); ++r) {
    if (cs.live_signs[r] != cs.live_signs[r + 1]) continue;
    if (!found || abs(cs.frequencies_hp[r]) > abs(cs.frequencies_hp[cs.reference])) {
      cs.reference = r;
      found = true;
    }
  }
  cs.omega_ref = cs.frequencies_hp[cs.reference];
  if (cs.omega_ref == 0) throw ContractViolation("reference frequency vanished");

  for (std::size_t r = 0; r < cs.pairs.size(); ++r) {
    if (r == cs.reference) continue;
    cs.theta_pairs.push_back(cs.pairs[r]);
    cs.theta.push_back(2 * cs.frequencies_hp[r] / cs.omega_ref);
    cs.parity_rhs.push_back(pair_parity(cs.live_signs[r], cs.live_signs[r + 1]));
  }
  return cs;
}

DependenceResult rational_dependence_search(const std::vector<HighReal>& f, long max_coeff,
                                            double tol) {
  if (f.empty()) throw ArgumentError("rational_dependence_search needs at least one value");
  if (max_coeff < 1) throw ArgumentError("max_coeff must be >= 1");
  if (!(tol > 0.0)) throw ArgumentError("tol must be positive");
  for (const HighReal& x : f) {
    if (x == 0) throw ArgumentError("frequencies must be nonzero");
  }
  DependenceResult result;
  result.max_coeff = max_coeff;
  const std::size_t n = f.size();
  if (n == 1) return result;

  // A relation with |alpha . f| < tol has a last coordinate below 1e3.
  const HighReal scale = HighReal(1000) / HighReal(tol);
  LatticeBasis basis;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector col(n + 1, 0);
    col[j] = 1;
    col[n] = static_cast<BigInt>(round(scale * f[j]));
    basis.columns.push_back(std::move(col));
  }
  const LllResult reduced = lll_reduce(basis);

  std::optional<BigInt> best_norm;
  for (const IntVector& v : reduced.basis.columns) {
    std::vector<long> alpha(n);
    bool within = true;
    BigInt norm = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (abs(v[j]) > max_coeff) within = false;
      alpha[j] = within ? static_cast<long>(v[j]) : 0;
      norm += v[j] * v[j];
    }
    if (!within || norm == 0) continue;
    HighReal dot = 0;
    for (std::size_t j = 0; j < n; ++j) dot += HighReal(alpha[j]) * f[j];
    const double residual = static_cast<double>(abs(dot));
    if (residual >= tol) continue;
    if (best_norm && norm >= *best_norm) continue;
    const auto lead = std::find_if(alpha.begin(), alpha.end(), [](long a) { return a != 0; });
    if (*lead < 0) {
      for (long& a : alpha) a = -a;
    }
    best_norm = norm;
    result.relation = std::move(alpha);
    result.residual = residual;
  }
  return result;
}

DependenceResult rational_dependence_search(const std::vector<double>& frequencies,
                                            long max_coeff, double tol) {
  std::vector<HighReal> hp(frequencies.begin(), frequencies.end());
  return rational_dependence_search(hp, max_coeff, tol);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::independent_evidence: return "independent_evidence";
    case Verdict::dependent_with_relation: return "dependent_with_relation";
    default: return "degenerate";
  }
}

VerdictResult attainability_verdict(const ConstraintSystem& cs, long dep_search_bound,
                                    double tol) {
  std::vector<HighReal> values{HighReal(1)};
  values.insert(values.end(), cs.theta.begin(), cs.theta.end());
  const DependenceResult dep = rational_dependence_search(values, dep_search_bound, tol);
  VerdictResult out;
  out.relation = dep.relation;
  out.verdict = dep.certified() ? Verdict::dependent_with_relation : Verdict::independent_evidence;
  return out;
}

VerdictResult pair_verdict(const EigenSystem& es, std::size_t i, std::size_t j,
                           long dep_search_bound, double dark_tol) {
  const TransferAnalysis ta = analyze_transfer(es, i, j, dark_tol);
  if (ta.live.size() < 3) return {};
  return attainability_verdict(build_constraints(ta, es), dep_search_bound);
}

}  // namespace spinitf
