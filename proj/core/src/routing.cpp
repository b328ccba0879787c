#include "spinitf/routing.hpp"

#include <algorithm>
#include <cmath>

#include "spinitf/itf.hpp"
#include "spinitf/network.hpp"
#include "spinitf/spectra.hpp"

namespace spinitf {

namespace {

EigenSystem biased_ring_system(std::size_t n, const std::vector<std::size_t>& nodes,
                               double zeta) {
  if (!std::isfinite(zeta)) throw ArgumentError("bias must be finite");
  SpinNetwork net = build_ring(n);
  for (std::size_t b : nodes) net = apply_bias(net, b, zeta);
  return eigensystem(net);
}

double pair_pmax(std::size_t n, const std::vector<std::size_t>& nodes, double zeta,
                 std::size_t s, std::size_t t) {
  return analyze_transfer(biased_ring_system(n, nodes, zeta), s, t).p_max;
}

// zeta -> infinity value: the chain segment holding both endpoints, or 0.
double limit_pmax(std::size_t n, std::vector<std::size_t> cuts, std::size_t s, std::size_t t) {
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t c = 0; c < cuts.size(); ++c) {
    const std::size_t from = cuts[c];
    const std::size_t to = cuts[(c + 1) % cuts.size()];
    std::vector<std::size_t> segment;
    for (std::size_t v = (from + 1) % n; v != to; v = (v + 1) % n) segment.push_back(v);
    const auto ps = std::find(segment.begin(), segment.end(), s);
    const auto pt = std::find(segment.begin(), segment.end(), t);
    if (ps == segment.end() || pt == segment.end()) continue;
    const Matrix p = chain_pmax(segment.size());
    return p(ps - segment.begin(), pt - segment.begin());
  }
  return 0.0;
}

std::size_t offset_to_last(std::size_t n, std::size_t node) { return (n - 1 - node) % n; }

}  // namespace

Matrix biased_ring_pmax(std::size_t n, const std::vector<std::size_t>& bias_nodes,
                        double zeta) {
  if (n < 4) throw InvalidTopology("biased ring needs n >= 4");
  return pmax_matrix(biased_ring_system(n, bias_nodes, zeta));
}

Matrix biased_ring_pmax(std::size_t n, std::size_t bias_node, double zeta) {
  return biased_ring_pmax(n, std::vector<std::size_t>{bias_node}, zeta);
}

Matrix chain_pmax(std::size_t n) { return pmax_matrix(chain_eigensystem(n)); }

const char* to_string(RouteMechanism m) {
  switch (m) {
    case RouteMechanism::odd_arc_midpoint: return "odd_arc_midpoint";
    case RouteMechanism::double_bias: return "double_bias";
    default: return "identity";
  }
}

RoutePlan plan_route(std::size_t n, std::size_t source, std::size_t target,
                     const RouteOptions& options) {
  if (n < 4) throw InvalidTopology("routing needs a ring with n >= 4");
  if (source >= n || target >= n) throw IndexError("route endpoint out of range");
  if (!(options.zeta > 0.0) || !std::isfinite(options.zeta)) {
    throw ArgumentError("reference bias must be positive and finite");
  }
  RoutePlan plan;
  plan.n = n;
  plan.source = source;
  plan.target = target;
  if (source == target) return plan;

  // Clockwise gap; the arc of gap g has g - 1 interior nodes.
  const std::size_t g = (target + n - source) % n;
  std::optional<std::size_t> mid;
  if (g % 2 == 0) {
    mid = (source + g / 2) % n;
  } else if ((n - g) % 2 == 0) {
    mid = (target + (n - g) / 2) % n;
  }

  if (mid) {
    plan.mechanism = RouteMechanism::odd_arc_midpoint;
    plan.bias_nodes = {{*mid, options.zeta}};
    plan.predicted_pmax = limit_pmax(n, {*mid}, source, target);
    plan.evaluated_pmax = pair_pmax(n, {*mid}, options.zeta, source, target);
    plan.relabeling_offset = offset_to_last(n, *mid);
    return plan;
  }

  plan.mechanism = RouteMechanism::double_bias;
  double best_limit = -1.0;
  double best_eval = -1.0;
  for (std::size_t a = 0; a < n; ++a) {
    if (a == source || a == target) continue;
    for (std::size_t b = a + 1; b < n; ++b) {
      if (b == source || b == target) continue;
      const double lim = limit_pmax(n, {a, b}, source, target);
      if (lim < best_limit - 1e-9) continue;
      const double ev = pair_pmax(n, {a, b}, options.zeta, source, target);
      if (lim > best_limit + 1e-9 || ev > best_eval) {
        best_limit = std::max(best_limit, lim);
        best_eval = ev;
        plan.bias_nodes = {{a, options.zeta}, {b, options.zeta}};
      }
    }
  }
  plan.predicted_pmax = best_limit;
  plan.evaluated_pmax = best_eval;
  plan.relabeling_offset = offset_to_last(n, plan.bias_nodes.front().node);
  return plan;
}

}  // namespace spinitf
