#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "covpeb/graph.hpp"
#include "covpeb/pebbling.hpp"

namespace covpeb {

// Runtime form of the concentration argument behind the cover pebbling
// theorem. Starting from unit-valued pebbles, repeatedly take the closest
// (fat, thin) pair and push one pebble from the fat node to the thin one
// along a minimal path whose inner nodes are all perfect. Every pebble then
// stays worth at most 2^d from its nearest fat node (the efficiency
// condition). When no fat node remains, the last fat node used is a node
// from which the whole pile, concentrated, still cannot cover the goal.
//
// Every step the argument relies on is checked as it runs; a failed check
// raises Error{ProofViolation}.

struct CollapseAudit {
  bool inner_path_perfect = false;
  bool source_parents_unit = false;
  bool arriving_value_bounded = false;
  bool fat_total_decreased = false;
  bool efficiency = false;

  bool all() const {
    return inner_path_perfect && source_parents_unit && arriving_value_bounded &&
           fat_total_decreased && efficiency;
  }
};

struct CollapseIteration {
  Node fat = 0;
  Node thin = 0;
  std::vector<Node> path;
  std::uint64_t new_pebble_value = 0;
  std::uint64_t fat_pebble_total_before = 0;
  std::uint64_t fat_pebble_total_after = 0;
  CollapseAudit audit;
};

struct CollapseReport {
  Node witness = 0;
  std::vector<CollapseIteration> iterations;
  ValuedDistribution final_distribution{{}};
  std::uint64_t initial_pebbles = 0;
};

/// Closest (fat, thin) pair, ties to least fat id then least thin id.
std::optional<std::pair<Node, Node>> select_pair(const Graph& g, const ValuedDistribution& vd,
                                                 const GoalDistribution& w);

/// Pushes one pebble from fat node f to thin node t along shortest_path(f,t).
/// The two smallest pebbles at f start the chain; each inner node adds its
/// smallest pebble. Throws Error{ProofViolation} when f is not fat, t not
/// thin, an inner node is not perfect, a starting pebble is worth more than
/// 1, or the arriving pebble is worth more than 2^d(f,t).
ValuedDistribution chain_move(const Graph& g, const ValuedDistribution& vd,
                              const GoalDistribution& w, Node f, Node t);

/// Every pebble worth at most 2^(distance from its nearest fat node);
/// vacuously true without fat nodes.
bool efficiency_audit(const Graph& g, const ValuedDistribution& vd, const GoalDistribution& w);

/// Runs the chain moves to exhaustion. The witness is the fat node of the
/// final iteration, or node 0 when nothing was ever fat. Only meaningful
/// as a concentration witness when `dist` admits no cover pebbling; the
/// run itself terminates on any input.
CollapseReport collapse_witness(const Graph& g, const Distribution& dist,
                                const GoalDistribution& w);

/// Sum of pebble counts over fat nodes.
std::uint64_t fat_pebble_total(const Distribution& dist, const GoalDistribution& w);

}  // namespace covpeb
