#include "covpeb/solver.hpp"

#include <string>

#include "covpeb/checked.hpp"
#include "covpeb/error.hpp"

namespace covpeb {

std::uint64_t cost_from_distances(std::span<const std::uint32_t> dist_from_v,
                                  const GoalDistribution& w) {
  require_size(w.size(), static_cast<std::uint32_t>(dist_from_v.size()), "distance row");
  std::uint64_t sum = 0;
  for (Node u = 0; u < dist_from_v.size(); ++u) {
    const std::uint32_t d = dist_from_v[u];
    std::uint64_t term = 0;
    std::uint64_t next = 0;
    if (d >= 64 || __builtin_mul_overflow(w[u], std::uint64_t{1} << d, &term) ||
        __builtin_add_overflow(sum, term, &next)) {
      throw Error(ErrorKind::Overflow, "cost overflows 64 bits at term for node " +
                                           std::to_string(u) + " (w=" + std::to_string(w[u]) +
                                           ", d=" + std::to_string(d) + ")");
    }
    sum = next;
  }
  return sum;
}

std::uint64_t cost_from(const Graph& g, const GoalDistribution& w, Node v) {
  require_size(g.node_count(), w.size(), "goal distribution");
  if (v >= g.node_count()) throw Error(ErrorKind::BadParams, "cost_from: node out of range");
  return cost_from_distances(bfs_distances(g, v), w);
}

CostProfile gamma(const Graph& g, const GoalDistribution& w) {
  require_size(g.node_count(), w.size(), "goal distribution");
  CostProfile profile;
  profile.costs.reserve(g.node_count());
  for (Node v = 0; v < g.node_count(); ++v) {
    const auto cost = cost_from_distances(bfs_distances(g, v), w);
    profile.costs.push_back(cost);
    if (cost > profile.gamma) {
      profile.gamma = cost;
      profile.argmax_node = v;
    }
  }
  return profile;
}

ProductCheck product_gamma_check(const Graph& g1, const GoalDistribution& w1, const Graph& g2,
                                 const GoalDistribution& w2) {
  require_size(g1.node_count(), w1.size(), "first goal distribution");
  require_size(g2.node_count(), w2.size(), "second goal distribution");
  const auto g = product(g1, g2);
  const auto w = product_goal(w1, w2);
  ProductCheck out;
  out.lhs = gamma(g, w).gamma;
  out.rhs = checked_mul(gamma(g1, w1).gamma, gamma(g2, w2).gamma, "gamma product");
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace covpeb
