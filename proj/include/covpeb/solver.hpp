#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "covpeb/graph.hpp"
#include "covpeb/pebbling.hpp"

namespace covpeb {

/// Cost of cover pebbling from every node, and its maximum.
struct CostProfile {
  std::vector<std::uint64_t> costs;
  /// The w-cover pebbling number.
  std::uint64_t gamma = 0;
  /// Least node id attaining gamma.
  Node argmax_node = 0;
};

/// Sum over u of w(u) * 2^d(v,u) given distances from v.
/// Throws Error{Overflow} naming the first term that does not fit.
std::uint64_t cost_from_distances(std::span<const std::uint32_t> dist_from_v,
                                  const GoalDistribution& w);

std::uint64_t cost_from(const Graph& g, const GoalDistribution& w, Node v);

/// Costs from every node; by the cover pebbling theorem the maximum is the
/// w-cover pebbling number.
CostProfile gamma(const Graph& g, const GoalDistribution& w);

struct ProductCheck {
  std::uint64_t lhs = 0;  ///< gamma of the product graph with the product goal
  std::uint64_t rhs = 0;  ///< product of the factor gammas
  bool equal = false;
};

ProductCheck product_gamma_check(const Graph& g1, const GoalDistribution& w1, const Graph& g2,
                                 const GoalDistribution& w2);

}  // namespace covpeb
