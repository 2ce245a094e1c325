#include "covpeb/oracle.hpp"

#include <string>

#include "covpeb/error.hpp"
#include "covpeb/solver.hpp"

namespace covpeb {

void SearchBudget::charge() {
  if (states_visited >= max_states) {
    throw Error(ErrorKind::BudgetExceeded,
                "search budget of " + std::to_string(max_states) + " states exhausted");
  }
  ++states_visited;
}

std::size_t CoverSearch::StateHash::operator()(const std::vector<std::uint64_t>& s) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto x : s) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

CoverSearch::CoverSearch(const Graph& g, const GoalDistribution& w) : g_(g), w_(w) {
  require_size(g.node_count(), w.size(), "goal distribution");
}

CoverDecision CoverSearch::decide(const Distribution& dist, SearchBudget& budget) {
  require_size(g_.node_count(), dist.size(), "distribution");
  using State = std::vector<std::uint64_t>;
  const std::uint64_t visited_before = budget.states_visited;
  CoverDecision out;

  State start(dist.counts().begin(), dist.counts().end());
  if (is_cover(start, w_)) {
    out.coverable = true;
    out.witness_moves.emplace();
    return out;
  }
  if (dead_.contains(start)) return out;

  struct Frame {
    State state;
    Edge via;     // move that produced this state
    Node source;  // next move: source node
    std::size_t target_index;
  };
  std::vector<Frame> stack;
  budget.charge();
  stack.push_back({std::move(start), {0, 0}, 0, 0});

  const Node n = g_.node_count();
  while (!stack.empty()) {
    Frame& top = stack.back();
    while (top.source < n &&
           (top.state[top.source] < 2 || top.target_index >= g_.neighbors(top.source).size())) {
      ++top.source;
      top.target_index = 0;
    }
    if (top.source == n) {
      dead_.insert(std::move(top.state));
      stack.pop_back();
      continue;
    }
    const Node from = top.source;
    const Node to = g_.neighbors(from)[top.target_index++];
    State child = top.state;
    child[from] -= 2;
    child[to] += 1;

    if (is_cover(child, w_)) {
      std::vector<Edge> moves;
      moves.reserve(stack.size());
      for (std::size_t i = 1; i < stack.size(); ++i) moves.push_back(stack[i].via);
      moves.emplace_back(from, to);
      out.coverable = true;
      out.witness_moves = std::move(moves);
      out.states_visited = budget.states_visited - visited_before;
      return out;
    }
    if (dead_.contains(child)) continue;
    budget.charge();
    stack.push_back({std::move(child), {from, to}, 0, 0});
  }
  out.states_visited = budget.states_visited - visited_before;
  return out;
}

CoverDecision can_cover(const Graph& g, const Distribution& dist, const GoalDistribution& w,
                        SearchBudget& budget) {
  CoverSearch search(g, w);
  return search.decide(dist, budget);
}

CoverDecision can_cover(const Graph& g, const Distribution& dist, const GoalDistribution& w) {
  SearchBudget budget;
  return can_cover(g, dist, w, budget);
}

bool for_each_composition(std::uint64_t total, std::uint32_t parts,
                          const std::function<bool(std::span<const std::uint64_t>)>& visit) {
  if (parts == 0) return total == 0 ? visit({}) : true;
  std::vector<std::uint64_t> c(parts, 0);
  c[0] = total;
  while (true) {
    if (!visit(c)) return false;
    // Find the rightmost non-zero entry before the last slot, move one unit
    // right and sweep everything after it into the next slot.
    std::int64_t i = static_cast<std::int64_t>(parts) - 2;
    while (i >= 0 && c[i] == 0) --i;
    if (i < 0) return true;
    const std::uint64_t tail = c[parts - 1];
    c[parts - 1] = 0;
    --c[i];
    c[i + 1] += 1 + tail;
  }
}

BruteGammaResult brute_gamma(const Graph& g, const GoalDistribution& w, SearchBudget& budget,
                             bool collect_all) {
  const std::uint32_t n = g.node_count();
  CoverSearch search(g, w);
  const std::uint64_t visited_before = budget.states_visited;
  BruteGammaResult out;
  const std::uint64_t demand = w.total();
  // Fewer pebbles than the goal total can never cover.
  out.certificate = Distribution::simple(n, 0, demand - 1);

  for (std::uint64_t pebbles = demand;; ++pebbles) {
    std::optional<Distribution> first_failure;
    for_each_composition(pebbles, n, [&](std::span<const std::uint64_t> counts) {
      Distribution dist(std::vector<std::uint64_t>(counts.begin(), counts.end()));
      if (search.decide(dist, budget).coverable) return true;
      if (!first_failure) first_failure = dist;
      if (collect_all) out.non_coverable.push_back(std::move(dist));
      return collect_all;
    });
    if (!first_failure) {
      out.gamma = pebbles;
      break;
    }
    out.certificate = std::move(*first_failure);
  }
  out.states_visited = budget.states_visited - visited_before;
  return out;
}

BruteGammaResult brute_gamma(const Graph& g, const GoalDistribution& w) {
  SearchBudget budget;
  return brute_gamma(g, w, budget);
}

bool worst_simple_check(const Graph& g, const GoalDistribution& w, SearchBudget& budget) {
  const auto profile = gamma(g, w);
  const auto n = g.node_count();
  CoverSearch search(g, w);
  const auto below = Distribution::simple(n, profile.argmax_node, profile.gamma - 1);
  if (search.decide(below, budget).coverable) return false;
  for (Node v = 0; v < n; ++v) {
    if (!search.decide(Distribution::simple(n, v, profile.gamma), budget).coverable) return false;
  }
  return true;
}

bool worst_simple_check(const Graph& g, const GoalDistribution& w) {
  SearchBudget budget;
  return worst_simple_check(g, w, budget);
}

}  // namespace covpeb
