#include "covpeb/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "covpeb/checked.hpp"
#include "covpeb/error.hpp"

namespace covpeb {

namespace {

struct NameEntry {
  FamilyKind kind;
  std::string_view name;
};

constexpr NameEntry kNames[] = {
    {FamilyKind::Path, "path"},
    {FamilyKind::EvenCycle, "even_cycle"},
    {FamilyKind::OddCycle, "odd_cycle"},
    {FamilyKind::Hypercube, "hypercube"},
    {FamilyKind::Complete, "complete"},
    {FamilyKind::CompleteMultipartite, "complete_multipartite"},
    {FamilyKind::Wheel, "wheel"},
};

[[noreturn]] void bad(FamilyKind kind, const std::string& why) {
  throw Error(ErrorKind::BadParams, std::string(to_string(kind)) + ": " + why);
}

std::uint64_t single(FamilyKind kind, std::span<const std::uint64_t> params) {
  if (params.size() != 1) bad(kind, "expects exactly one parameter");
  return params[0];
}

std::uint32_t node_param(FamilyKind kind, std::uint64_t n, std::uint64_t min) {
  if (n < min) bad(kind, "parameter must be at least " + std::to_string(min));
  if (n > kMaxNodes) bad(kind, "parameter exceeds the node count cap");
  return static_cast<std::uint32_t>(n);
}

std::vector<Edge> cycle_edges(std::uint32_t length) {
  std::vector<Edge> edges;
  for (Node v = 0; v < length; ++v) edges.emplace_back(v, (v + 1) % length);
  return edges;
}

void check_parts(FamilyKind kind, std::span<const std::uint64_t> parts) {
  if (parts.empty()) bad(kind, "needs at least one part");
  if (std::any_of(parts.begin(), parts.end(), [](std::uint64_t p) { return p == 0; })) {
    bad(kind, "part sizes must be positive");
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    bad(kind, "part sizes must be non-increasing");
  }
  if (parts.size() == 1 && parts[0] != 1) bad(kind, "a single part of size > 1 is disconnected");
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  for (const auto& e : kNames) {
    if (e.kind == kind) return e.name;
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family_kind(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.kind;
  }
  return std::nullopt;
}

std::pair<FamilyKind, std::uint64_t> cycle_parameter(std::uint64_t length) {
  if (length < 3) throw Error(ErrorKind::BadParams, "cycle length must be at least 3");
  if (length % 2 == 0) return {FamilyKind::EvenCycle, length / 2};
  return {FamilyKind::OddCycle, (length + 1) / 2};
}

Graph family(FamilyKind kind, std::span<const std::uint64_t> params) {
  switch (kind) {
    case FamilyKind::Path: {
      const auto n = node_param(kind, single(kind, params), 1);
      std::vector<Edge> edges;
      for (Node v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      return Graph(n, false, edges);
    }
    case FamilyKind::EvenCycle:
    case FamilyKind::OddCycle: {
      const auto length = node_param(kind, single(kind, params), 3);
      if ((length % 2 == 0) != (kind == FamilyKind::EvenCycle)) {
        bad(kind, "cycle length " + std::to_string(length) + " has the wrong parity");
      }
      return Graph(length, false, cycle_edges(length));
    }
    case FamilyKind::Hypercube: {
      const auto dim = single(kind, params);
      if (dim > 20) bad(kind, "dimension must be at most 20");
      const Node n = Node{1} << dim;
      std::vector<Edge> edges;
      for (Node v = 0; v < n; ++v) {
        for (std::uint64_t bit = 0; bit < dim; ++bit) {
          const Node u = v ^ (Node{1} << bit);
          if (v < u) edges.emplace_back(v, u);
        }
      }
      return Graph(n, false, edges);
    }
    case FamilyKind::Complete: {
      const auto n = node_param(kind, single(kind, params), 1);
      std::vector<Edge> edges;
      for (Node u = 0; u < n; ++u) {
        for (Node v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      }
      return Graph(n, false, edges);
    }
    case FamilyKind::CompleteMultipartite: {
      check_parts(kind, params);
      std::uint64_t total = 0;
      for (auto p : params) total = checked_add(total, p, "multipartite node count");
      const auto n = node_param(kind, total, 1);
      std::vector<std::uint32_t> part_of;
      for (std::size_t i = 0; i < params.size(); ++i) {
        part_of.insert(part_of.end(), params[i], static_cast<std::uint32_t>(i));
      }
      std::vector<Edge> edges;
      for (Node u = 0; u < n; ++u) {
        for (Node v = u + 1; v < n; ++v) {
          if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
        }
      }
      return Graph(n, false, edges);
    }
    case FamilyKind::Wheel: {
      const auto rim = node_param(kind, single(kind, params), 3);
      auto edges = cycle_edges(rim);
      for (Node v = 0; v < rim; ++v) edges.emplace_back(v, rim);
      return Graph(rim + 1, false, edges);
    }
  }
  bad(kind, "unknown family");
}

std::uint64_t closed_form(FamilyKind kind, std::span<const std::uint64_t> params) {
  switch (kind) {
    case FamilyKind::Path: {
      const auto n = single(kind, params);
      if (n < 1) bad(kind, "n must be at least 1");
      return checked_pow2(n) - 1;
    }
    case FamilyKind::EvenCycle: {
      const auto n = single(kind, params);
      if (n < 2) bad(kind, "n must be at least 2");
      return checked_mul(3, checked_pow2(n) - 1);
    }
    case FamilyKind::OddCycle: {
      const auto n = single(kind, params);
      if (n < 2) bad(kind, "n must be at least 2");
      return checked_pow2(n + 1) - 3;
    }
    case FamilyKind::Hypercube: {
      const auto n = single(kind, params);
      std::uint64_t out = 1;
      for (std::uint64_t i = 0; i < n; ++i) out = checked_mul(out, 3, "3^n");
      return out;
    }
    case FamilyKind::Complete: {
      const auto n = single(kind, params);
      if (n < 1) bad(kind, "n must be at least 1");
      return checked_mul(2, n) - 1;
    }
    case FamilyKind::CompleteMultipartite: {
      check_parts(kind, params);
      std::uint64_t sum = checked_mul(4, params[0]);
      for (std::size_t i = 1; i < params.size(); ++i) sum = checked_add(sum, checked_mul(2, params[i]));
      return sum - 3;
    }
    case FamilyKind::Wheel: {
      const auto n = single(kind, params);
      if (n < 3) bad(kind, "n must be at least 3");
      return checked_mul(4, n) - 5;
    }
  }
  bad(kind, "unknown family");
}

}  // namespace covpeb
