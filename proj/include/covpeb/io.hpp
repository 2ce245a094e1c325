#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "covpeb/collapse.hpp"
#include "covpeb/graph.hpp"
#include "covpeb/oracle.hpp"
#include "covpeb/pebbling.hpp"
#include "covpeb/solver.hpp"

namespace covpeb {

/// {"nodes": int, "directed": bool, "edges": [[u,v],...], "goal": [...]}
/// with "goal" optional.
struct GraphDocument {
  Graph graph;
  std::optional<GoalDistribution> goal;

  /// The stored goal, or the 1-distribution.
  GoalDistribution goal_or_ones() const;
};

/// Throws Error{Parse} on schema problems and the graph errors otherwise.
GraphDocument graph_from_json(const nlohmann::json& doc);
GraphDocument parse_graph(std::string_view text);
GraphDocument read_graph_file(const std::filesystem::path& path);

nlohmann::json to_json(const Graph& g, const GoalDistribution* goal = nullptr);
nlohmann::json to_json(const CostProfile& profile);
nlohmann::json to_json(const CoverDecision& decision);
nlohmann::json to_json(const CollapseReport& report);

}  // namespace covpeb
