#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "covpeb/graph.hpp"

namespace covpeb {

/// Positive pebble demand per node.
class GoalDistribution {
 public:
  /// Throws Error{BadParams} on an empty vector or a zero entry.
  explicit GoalDistribution(std::vector<std::uint64_t> demand);

  /// The usual cover: one pebble on every node.
  static GoalDistribution ones(std::uint32_t node_count);

  std::uint64_t operator[](Node v) const { return w_[v]; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(w_.size()); }
  std::span<const std::uint64_t> values() const noexcept { return w_; }
  /// Checked sum of all demands.
  std::uint64_t total() const;

  GoalDistribution scaled(std::uint64_t factor) const;

  friend bool operator==(const GoalDistribution&, const GoalDistribution&) = default;

 private:
  std::vector<std::uint64_t> w_;
};

/// Pebble counts per node with a cached total.
class Distribution {
 public:
  explicit Distribution(std::vector<std::uint64_t> counts);

  static Distribution simple(std::uint32_t node_count, Node at, std::uint64_t pebbles);

  std::uint64_t operator[](Node v) const { return counts_[v]; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(counts_.size()); }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept { return total_; }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// Per node, a sorted multiset of pebble values. A value counts the
/// original unit pebbles merged into that pebble.
class ValuedDistribution {
 public:
  explicit ValuedDistribution(std::vector<std::vector<std::uint64_t>> values);

  /// Every pebble of `dist` as a unit-valued pebble.
  static ValuedDistribution lift(const Distribution& dist);

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(values_.size()); }
  /// Ascending pebble values at v.
  std::span<const std::uint64_t> at(Node v) const { return values_.at(v); }
  std::uint64_t count(Node v) const { return values_.at(v).size(); }
  Distribution counts() const;
  std::uint64_t total_value() const;

  friend bool operator==(const ValuedDistribution&, const ValuedDistribution&) = default;

 private:
  friend ValuedDistribution apply_move_valued(const ValuedDistribution&, const Graph&, Node, Node,
                                              std::pair<std::uint64_t, std::uint64_t>);
  std::vector<std::vector<std::uint64_t>> values_;
};

enum class NodeStatus { Fat, Thin, Perfect };

std::string_view to_string(NodeStatus status);

NodeStatus classify(const Distribution& dist, const GoalDistribution& w, Node v);
NodeStatus classify(std::uint64_t count, std::uint64_t demand);

bool is_cover(const Distribution& dist, const GoalDistribution& w);
bool is_cover(std::span<const std::uint64_t> counts, const GoalDistribution& w);

/// Two pebbles leave `from`, one arrives at `to`.
/// Throws Error{InsufficientPebbles, NotAnEdge, DimensionMismatch}.
Distribution apply_move(const Distribution& dist, const Graph& g, Node from, Node to);

/// Valued form of the move: the parents with the given values leave `from`
/// and one pebble worth their sum arrives at `to`.
/// Throws Error{ValueNotPresent, NotAnEdge, DimensionMismatch, Overflow}.
ValuedDistribution apply_move_valued(const ValuedDistribution& vd, const Graph& g, Node from,
                                     Node to, std::pair<std::uint64_t, std::uint64_t> parents);

/// (w1 □ w2)(a,b) = w1(a) * w2(b), row-major like product().
GoalDistribution product_goal(const GoalDistribution& w1, const GoalDistribution& w2);

/// Parses "23,0,0,0,0": comma separated non-negative integers, whitespace
/// around entries allowed. Throws Error{Parse}.
std::vector<std::uint64_t> parse_counts(std::string_view text);

void require_size(std::uint32_t expected, std::uint32_t actual, const char* what);

}  // namespace covpeb
