#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "covpeb/graph.hpp"

namespace covpeb {

enum class FamilyKind {
  Path,
  EvenCycle,
  OddCycle,
  Hypercube,
  Complete,
  CompleteMultipartite,
  Wheel,
};

std::string_view to_string(FamilyKind kind);
std::optional<FamilyKind> parse_family_kind(std::string_view name);

/// Standard graph of a family.
///
///   Path                  {n}          n >= 1 nodes in a line
///   EvenCycle, OddCycle   {length}     cycle on `length` nodes, parity must match
///   Hypercube             {n}          2^n nodes, n <= 20
///   Complete              {n}          K_n, n >= 1
///   CompleteMultipartite  {n_1..n_k}   non-increasing part sizes; connected
///                                      only if k >= 2 or the graph is K_1
///   Wheel                 {n}          n-cycle rim (n >= 3) plus hub node n
///
/// Throws Error{BadParams}.
Graph family(FamilyKind kind, std::span<const std::uint64_t> params);

/// Cover number of a family for the 1-distribution. Cycles take the table
/// parameter n, not the node count: EvenCycle{n} is the 2n-cycle and
/// OddCycle{n} the (2n-1)-cycle. Other kinds take the same parameters as
/// family().
std::uint64_t closed_form(FamilyKind kind, std::span<const std::uint64_t> params);

/// Cycle kind and table parameter for a cycle on `length` nodes.
std::pair<FamilyKind, std::uint64_t> cycle_parameter(std::uint64_t length);

}  // namespace covpeb
