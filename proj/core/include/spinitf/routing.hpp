#pragma once

// Bias-field routing on uniform rings. A large bias on one node decouples it,
// leaving an open chain on the remaining nodes.

#include <cstddef>
#include <optional>
#include <vector>

#include "spinitf/types.hpp"

namespace spinitf {

/// p_max matrix of the ring C_n with bias zeta on each listed node (0-based).
Matrix biased_ring_pmax(std::size_t n, const std::vector<std::size_t>& bias_nodes, double zeta);
Matrix biased_ring_pmax(std::size_t n, std::size_t bias_node, double zeta);

/// p_max matrix of the uniform open chain of n spins.
Matrix chain_pmax(std::size_t n);

enum class RouteMechanism { odd_arc_midpoint, double_bias, identity };

const char* to_string(RouteMechanism m);

struct BiasSite {
  std::size_t node = 0;
  double zeta = 0.0;
};

struct RoutePlan {
  std::size_t n = 0;
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<BiasSite> bias_nodes;
  double predicted_pmax = 1.0;  ///< zeta -> infinity value
  std::optional<double> evaluated_pmax;  ///< at the reference zeta
  RouteMechanism mechanism = RouteMechanism::identity;
  /// Rotation r with node i -> (i + r) mod n that moves the first bias node to n - 1.
  std::size_t relabeling_offset = 0;
};

struct RouteOptions {
  double zeta = 1e3;
};

/// Single midpoint bias when the arc between source and target on one side
/// has an odd number of interior nodes, otherwise an exhaustive scan over
/// pairs of bias nodes. Throws InvalidTopology for n < 4 and IndexError for
/// out-of-range nodes.
RoutePlan plan_route(std::size_t n, std::size_t source, std::size_t target,
                     const RouteOptions& options = {});

}  // namespace spinitf
