#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "covpeb/graph.hpp"
#include "covpeb/pebbling.hpp"

namespace covpeb {

inline constexpr std::uint64_t kDefaultMaxStates = 1'000'000;

/// Caps the number of distinct states a search may expand. Passed by
/// reference so one budget can span several searches.
struct SearchBudget {
  std::uint64_t max_states = kDefaultMaxStates;
  std::uint64_t states_visited = 0;

  /// Throws Error{BudgetExceeded} when one more state would pass the cap.
  void charge();
};

struct CoverDecision {
  bool coverable = false;
  /// Moves reaching a cover, present iff coverable.
  std::optional<std::vector<Edge>> witness_moves;
  /// States expanded by this decision.
  std::uint64_t states_visited = 0;
};

/// Exact coverability for a fixed graph and goal. Keeps the set of states
/// known to be non-coverable between queries; that set only depends on the
/// graph and the goal, so reusing a search across many starting
/// distributions stays exact.
class CoverSearch {
 public:
  CoverSearch(const Graph& g, const GoalDistribution& w);

  /// Depth-first search over count vectors. Moves are tried from sources in
  /// ascending id, then targets in ascending id; the first cover found is
  /// returned. Every move removes one pebble, so the state graph is acyclic
  /// and a state is marked dead only after all of its successors are.
  CoverDecision decide(const Distribution& dist, SearchBudget& budget);

  std::size_t dead_states() const noexcept { return dead_.size(); }

 private:
  struct StateHash {
    std::size_t operator()(const std::vector<std::uint64_t>& s) const noexcept;
  };

  const Graph& g_;
  const GoalDistribution& w_;
  std::unordered_set<std::vector<std::uint64_t>, StateHash> dead_;
};

CoverDecision can_cover(const Graph& g, const Distribution& dist, const GoalDistribution& w,
                        SearchBudget& budget);
CoverDecision can_cover(const Graph& g, const Distribution& dist, const GoalDistribution& w);

struct BruteGammaResult {
  std::uint64_t gamma = 0;
  /// A distribution of gamma - 1 pebbles admitting no cover pebbling.
  Distribution certificate{{}};
  /// With collect_all: every non-coverable distribution met while scanning,
  /// in scan order (ascending total, then composition order).
  std::vector<Distribution> non_coverable;
  std::uint64_t states_visited = 0;
};

/// Smallest n such that every distribution of n pebbles is coverable, by
/// scanning n upward from the goal total and deciding every composition of
/// n. Coverability is monotone in added pebbles, so the first fully
/// coverable n is the answer. Throws Error{BudgetExceeded}.
BruteGammaResult brute_gamma(const Graph& g, const GoalDistribution& w, SearchBudget& budget,
                             bool collect_all = false);
BruteGammaResult brute_gamma(const Graph& g, const GoalDistribution& w);

/// True iff gamma - 1 pebbles on the argmax node cannot be covered while
/// gamma pebbles on any single node can, gamma being the formula value.
bool worst_simple_check(const Graph& g, const GoalDistribution& w, SearchBudget& budget);
bool worst_simple_check(const Graph& g, const GoalDistribution& w);

/// Visits every composition of `total` into `parts` non-negative entries in
/// lexicographically descending order. Stops early when `visit` returns
/// false; returns false in that case.
bool for_each_composition(std::uint64_t total, std::uint32_t parts,
                          const std::function<bool(std::span<const std::uint64_t>)>& visit);

}  // namespace covpeb
