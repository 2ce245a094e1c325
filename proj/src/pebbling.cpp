#include "covpeb/pebbling.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "covpeb/checked.hpp"
#include "covpeb/error.hpp"

namespace covpeb {

void require_size(std::uint32_t expected, std::uint32_t actual, const char* what) {
  if (expected != actual) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has " + std::to_string(actual) +
                                                  " entries, expected " + std::to_string(expected));
  }
}

GoalDistribution::GoalDistribution(std::vector<std::uint64_t> demand) : w_(std::move(demand)) {
  if (w_.empty()) throw Error(ErrorKind::BadParams, "goal distribution is empty");
  for (std::size_t v = 0; v < w_.size(); ++v) {
    if (w_[v] == 0) {
      throw Error(ErrorKind::BadParams,
                  "goal distribution must be positive; node " + std::to_string(v) + " demands 0");
    }
  }
}

GoalDistribution GoalDistribution::ones(std::uint32_t node_count) {
  return GoalDistribution(std::vector<std::uint64_t>(node_count, 1));
}

std::uint64_t GoalDistribution::total() const {
  std::uint64_t sum = 0;
  for (auto x : w_) sum = checked_add(sum, x, "goal total");
  return sum;
}

GoalDistribution GoalDistribution::scaled(std::uint64_t factor) const {
  std::vector<std::uint64_t> out;
  out.reserve(w_.size());
  for (auto x : w_) out.push_back(checked_mul(x, factor, "scaled goal"));
  return GoalDistribution(std::move(out));
}

Distribution::Distribution(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
  for (auto c : counts_) total_ = checked_add(total_, c, "pebble total");
}

Distribution Distribution::simple(std::uint32_t node_count, Node at, std::uint64_t pebbles) {
  std::vector<std::uint64_t> counts(node_count, 0);
  counts.at(at) = pebbles;
  return Distribution(std::move(counts));
}

ValuedDistribution::ValuedDistribution(std::vector<std::vector<std::uint64_t>> values)
    : values_(std::move(values)) {
  for (auto& pebbles : values_) {
    if (std::find(pebbles.begin(), pebbles.end(), 0u) != pebbles.end()) {
      throw Error(ErrorKind::BadParams, "pebble values must be positive");
    }
    std::sort(pebbles.begin(), pebbles.end());
  }
}

ValuedDistribution ValuedDistribution::lift(const Distribution& dist) {
  std::vector<std::vector<std::uint64_t>> values(dist.size());
  for (Node v = 0; v < dist.size(); ++v) values[v].assign(dist[v], 1);
  return ValuedDistribution(std::move(values));
}

Distribution ValuedDistribution::counts() const {
  std::vector<std::uint64_t> counts;
  counts.reserve(values_.size());
  for (const auto& pebbles : values_) counts.push_back(pebbles.size());
  return Distribution(std::move(counts));
}

std::uint64_t ValuedDistribution::total_value() const {
  std::uint64_t sum = 0;
  for (const auto& pebbles : values_) {
    for (auto x : pebbles) sum = checked_add(sum, x, "total value");
  }
  return sum;
}

std::string_view to_string(NodeStatus status) {
  switch (status) {
    case NodeStatus::Fat: return "fat";
    case NodeStatus::Thin: return "thin";
    case NodeStatus::Perfect: return "perfect";
  }
  return "unknown";
}

NodeStatus classify(std::uint64_t count, std::uint64_t demand) {
  if (count > demand) return NodeStatus::Fat;
  if (count < demand) return NodeStatus::Thin;
  return NodeStatus::Perfect;
}

NodeStatus classify(const Distribution& dist, const GoalDistribution& w, Node v) {
  require_size(w.size(), dist.size(), "distribution");
  if (v >= dist.size()) throw Error(ErrorKind::BadParams, "classify: node out of range");
  return classify(dist[v], w[v]);
}

bool is_cover(std::span<const std::uint64_t> counts, const GoalDistribution& w) {
  require_size(w.size(), static_cast<std::uint32_t>(counts.size()), "distribution");
  for (Node v = 0; v < counts.size(); ++v) {
    if (counts[v] < w[v]) return false;
  }
  return true;
}

bool is_cover(const Distribution& dist, const GoalDistribution& w) {
  return is_cover(dist.counts(), w);
}

namespace {

void check_move(const Graph& g, std::uint32_t size, Node from, Node to) {
  require_size(g.node_count(), size, "distribution");
  if (!g.has_edge(from, to)) {
    throw Error(ErrorKind::NotAnEdge,
                "no edge " + std::to_string(from) + "->" + std::to_string(to));
  }
}

}  // namespace

Distribution apply_move(const Distribution& dist, const Graph& g, Node from, Node to) {
  check_move(g, dist.size(), from, to);
  if (dist[from] < 2) {
    throw Error(ErrorKind::InsufficientPebbles,
                "node " + std::to_string(from) + " holds " + std::to_string(dist[from]) +
                    " pebbles, a move needs 2");
  }
  std::vector<std::uint64_t> counts(dist.counts().begin(), dist.counts().end());
  counts[from] -= 2;
  counts[to] += 1;
  return Distribution(std::move(counts));
}

ValuedDistribution apply_move_valued(const ValuedDistribution& vd, const Graph& g, Node from,
                                     Node to, std::pair<std::uint64_t, std::uint64_t> parents) {
  check_move(g, vd.size(), from, to);
  auto values = vd.values_;
  auto& source = values[from];
  for (auto parent : {parents.first, parents.second}) {
    auto it = std::lower_bound(source.begin(), source.end(), parent);
    if (it == source.end() || *it != parent) {
      throw Error(ErrorKind::ValueNotPresent, "no pebble of value " + std::to_string(parent) +
                                                  " at node " + std::to_string(from));
    }
    source.erase(it);
  }
  const auto child = checked_add(parents.first, parents.second, "pebble value");
  auto& target = values[to];
  target.insert(std::upper_bound(target.begin(), target.end(), child), child);
  ValuedDistribution out({});
  out.values_ = std::move(values);
  return out;
}

GoalDistribution product_goal(const GoalDistribution& w1, const GoalDistribution& w2) {
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{w1.size()} * w2.size());
  for (auto a : w1.values()) {
    for (auto b : w2.values()) out.push_back(checked_mul(a, b, "product goal entry"));
  }
  return GoalDistribution(std::move(out));
}

std::vector<std::uint64_t> parse_counts(std::string_view text) {
  std::vector<std::uint64_t> out;
  auto trim = [](std::string_view s) {
    const auto first = s.find_first_not_of(" \t\n");
    if (first == std::string_view::npos) return std::string_view{};
    const auto last = s.find_last_not_of(" \t\n");
    return s.substr(first, last - first + 1);
  };
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto field = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw Error(ErrorKind::Parse, "bad count '" + std::string(field) + "' in '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace covpeb
