#include "covpeb/collapse.hpp"

#include <limits>
#include <string>

#include "covpeb/error.hpp"

namespace covpeb {

namespace {

[[noreturn]] void violation(const std::string& what) {
  throw Error(ErrorKind::ProofViolation, "collapse: " + what);
}

// 2^d, saturated: no 64-bit pebble value can exceed it once d >= 64.
std::uint64_t value_bound(std::uint32_t d) {
  return d >= 64 ? std::numeric_limits<std::uint64_t>::max() : std::uint64_t{1} << d;
}

std::optional<std::pair<Node, Node>> closest_pair(const DistanceMatrix& dm,
                                                  const ValuedDistribution& vd,
                                                  const GoalDistribution& w) {
  std::vector<Node> fat;
  std::vector<Node> thin;
  for (Node v = 0; v < vd.size(); ++v) {
    switch (classify(vd.count(v), w[v])) {
      case NodeStatus::Fat: fat.push_back(v); break;
      case NodeStatus::Thin: thin.push_back(v); break;
      case NodeStatus::Perfect: break;
    }
  }
  std::optional<std::pair<Node, Node>> best;
  std::uint32_t best_d = std::numeric_limits<std::uint32_t>::max();
  for (Node f : fat) {
    for (Node t : thin) {
      if (dm(f, t) < best_d) {
        best_d = dm(f, t);
        best = {f, t};
      }
    }
  }
  return best;
}

bool efficient(const DistanceMatrix& dm, const ValuedDistribution& vd, const GoalDistribution& w) {
  std::vector<Node> fat;
  for (Node v = 0; v < vd.size(); ++v) {
    if (classify(vd.count(v), w[v]) == NodeStatus::Fat) fat.push_back(v);
  }
  if (fat.empty()) return true;
  for (Node u = 0; u < vd.size(); ++u) {
    const auto values = vd.at(u);
    if (values.empty()) continue;
    std::uint32_t nearest = std::numeric_limits<std::uint32_t>::max();
    for (Node f : fat) nearest = std::min(nearest, dm(f, u));
    if (values.back() > value_bound(nearest)) return false;
  }
  return true;
}

ValuedDistribution chain(const Graph& g, const ValuedDistribution& vd, const GoalDistribution& w,
                         Node f, Node t, CollapseIteration& record) {
  require_size(g.node_count(), vd.size(), "valued distribution");
  require_size(g.node_count(), w.size(), "goal distribution");
  if (f >= vd.size() || t >= vd.size()) violation("pair node out of range");
  if (classify(vd.count(f), w[f]) != NodeStatus::Fat) {
    violation("chain source " + std::to_string(f) + " is not fat");
  }
  if (classify(vd.count(t), w[t]) != NodeStatus::Thin) {
    violation("chain target " + std::to_string(t) + " is not thin");
  }

  record.fat = f;
  record.thin = t;
  record.path = shortest_path(g, f, t);
  const auto& path = record.path;

  record.audit.inner_path_perfect = true;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (classify(vd.count(path[i]), w[path[i]]) != NodeStatus::Perfect) {
      record.audit.inner_path_perfect = false;
      violation("inner path node " + std::to_string(path[i]) + " is not perfect");
    }
  }

  const auto source = vd.at(f);
  record.audit.source_parents_unit = source[0] == 1 && source[1] == 1;
  if (!record.audit.source_parents_unit) {
    violation("pebbles leaving fat node " + std::to_string(f) + " are not unit valued");
  }

  auto current = apply_move_valued(vd, g, f, path[1], {source[0], source[1]});
  std::uint64_t carried = source[0] + source[1];
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    // The smallest pebble at p_i that was there before the carried one came in.
    // Inner nodes are perfect with positive demand, so one exists.
    const std::uint64_t old = vd.at(path[i])[0];
    current = apply_move_valued(current, g, path[i], path[i + 1], {carried, old});
    carried += old;
  }

  record.new_pebble_value = carried;
  const auto d = static_cast<std::uint32_t>(path.size() - 1);
  record.audit.arriving_value_bounded = carried <= value_bound(d);
  if (!record.audit.arriving_value_bounded) {
    violation("pebble of value " + std::to_string(carried) + " arrived at distance " +
              std::to_string(d));
  }
  return current;
}

}  // namespace

std::uint64_t fat_pebble_total(const Distribution& dist, const GoalDistribution& w) {
  require_size(w.size(), dist.size(), "distribution");
  std::uint64_t sum = 0;
  for (Node v = 0; v < dist.size(); ++v) {
    if (dist[v] > w[v]) sum += dist[v];
  }
  return sum;
}

std::optional<std::pair<Node, Node>> select_pair(const Graph& g, const ValuedDistribution& vd,
                                                 const GoalDistribution& w) {
  require_size(g.node_count(), vd.size(), "valued distribution");
  require_size(g.node_count(), w.size(), "goal distribution");
  return closest_pair(distance_matrix(g), vd, w);
}

ValuedDistribution chain_move(const Graph& g, const ValuedDistribution& vd,
                              const GoalDistribution& w, Node f, Node t) {
  CollapseIteration scratch;
  return chain(g, vd, w, f, t, scratch);
}

bool efficiency_audit(const Graph& g, const ValuedDistribution& vd, const GoalDistribution& w) {
  require_size(g.node_count(), vd.size(), "valued distribution");
  require_size(g.node_count(), w.size(), "goal distribution");
  return efficient(distance_matrix(g), vd, w);
}

CollapseReport collapse_witness(const Graph& g, const Distribution& dist,
                                const GoalDistribution& w) {
  require_size(g.node_count(), dist.size(), "distribution");
  require_size(g.node_count(), w.size(), "goal distribution");
  const auto dm = distance_matrix(g);

  CollapseReport report;
  report.initial_pebbles = dist.total();
  auto vd = ValuedDistribution::lift(dist);
  if (!efficient(dm, vd, w)) violation("unit-valued start fails the efficiency condition");

  // Each iteration spends two pebbles from a fat node.
  const std::uint64_t max_iterations = dist.total() / 2;
  while (auto pair = closest_pair(dm, vd, w)) {
    if (report.iterations.size() >= max_iterations) violation("iteration bound exceeded");
    CollapseIteration it;
    it.fat_pebble_total_before = fat_pebble_total(vd.counts(), w);
    vd = chain(g, vd, w, pair->first, pair->second, it);
    it.fat_pebble_total_after = fat_pebble_total(vd.counts(), w);
    it.audit.fat_total_decreased = it.fat_pebble_total_after < it.fat_pebble_total_before;
    if (!it.audit.fat_total_decreased) violation("fat pebble total did not decrease");
    it.audit.efficiency = efficient(dm, vd, w);
    if (!it.audit.efficiency) violation("efficiency condition broken after a chain move");
    report.iterations.push_back(std::move(it));
  }

  if (!report.iterations.empty()) {
    report.witness = report.iterations.back().fat;
  } else {
    // No chain ran: either nothing is fat (any node will do, take 0) or
    // nothing is thin (the input already covers); take the least fat node.
    report.witness = 0;
    for (Node v = 0; v < vd.size(); ++v) {
      if (vd.count(v) > w[v]) {
        report.witness = v;
        break;
      }
    }
  }
  if (vd.total_value() != report.initial_pebbles) violation("total value not conserved");
  report.final_distribution = std::move(vd);
  return report;
}

}  // namespace covpeb
