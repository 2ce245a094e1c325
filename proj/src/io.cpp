#include "covpeb/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "covpeb/error.hpp"

namespace covpeb {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& what) {
  throw Error(ErrorKind::Parse, "graph document: " + what);
}

std::uint64_t as_count(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    schema(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

Node as_node(const json& j) {
  const auto v = as_count(j, "edge endpoint");
  if (v > std::numeric_limits<Node>::max()) schema("edge endpoint out of range");
  return static_cast<Node>(v);
}

}  // namespace

GoalDistribution GraphDocument::goal_or_ones() const {
  return goal ? *goal : GoalDistribution::ones(graph.node_count());
}

GraphDocument graph_from_json(const json& doc) {
  if (!doc.is_object()) schema("expected an object");
  if (!doc.contains("nodes")) schema("missing \"nodes\"");
  const auto nodes = as_count(doc["nodes"], "\"nodes\"");
  if (nodes > kMaxNodes) schema("\"nodes\" exceeds the node count cap");
  bool directed = false;
  if (doc.contains("directed")) {
    if (!doc["directed"].is_boolean()) schema("\"directed\" must be a boolean");
    directed = doc["directed"].get<bool>();
  }
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) schema("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) schema("each edge must be a [u, v] pair");
      edges.emplace_back(as_node(e[0]), as_node(e[1]));
    }
  }
  Graph graph(static_cast<std::uint32_t>(nodes), directed, edges);
  std::optional<GoalDistribution> goal;
  if (doc.contains("goal") && !doc["goal"].is_null()) {
    if (!doc["goal"].is_array()) schema("\"goal\" must be an array");
    std::vector<std::uint64_t> w;
    for (const auto& x : doc["goal"]) w.push_back(as_count(x, "goal entry"));
    require_size(graph.node_count(), static_cast<std::uint32_t>(w.size()), "goal");
    goal.emplace(std::move(w));
  }
  return {std::move(graph), std::move(goal)};
}

GraphDocument parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

GraphDocument read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

json to_json(const Graph& g, const GoalDistribution* goal) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  json out = {{"nodes", g.node_count()}, {"directed", g.directed()}, {"edges", std::move(edges)}};
  if (goal) out["goal"] = std::vector<std::uint64_t>(goal->values().begin(), goal->values().end());
  return out;
}

json to_json(const CostProfile& profile) {
  return {{"gamma", profile.gamma}, {"argmax_node", profile.argmax_node}, {"costs", profile.costs}};
}

json to_json(const CoverDecision& decision) {
  json out = {{"coverable", decision.coverable}, {"states_visited", decision.states_visited}};
  if (decision.witness_moves) {
    json moves = json::array();
    for (auto [from, to] : *decision.witness_moves) moves.push_back({from, to});
    out["witness_moves"] = std::move(moves);
  }
  return out;
}

json to_json(const CollapseReport& report) {
  json iterations = json::array();
  for (const auto& it : report.iterations) {
    iterations.push_back({
        {"pair", {it.fat, it.thin}},
        {"path", it.path},
        {"new_pebble_value", it.new_pebble_value},
        {"fat_pebble_total_before", it.fat_pebble_total_before},
        {"fat_pebble_total_after", it.fat_pebble_total_after},
        {"audit",
         {{"inner_path_perfect", it.audit.inner_path_perfect},
          {"source_parents_unit", it.audit.source_parents_unit},
          {"arriving_value_bounded", it.audit.arriving_value_bounded},
          {"fat_total_decreased", it.audit.fat_total_decreased},
          {"efficiency", it.audit.efficiency}}},
    });
  }
  json values = json::array();
  for (Node v = 0; v < report.final_distribution.size(); ++v) {
    const auto pebbles = report.final_distribution.at(v);
    values.push_back(std::vector<std::uint64_t>(pebbles.begin(), pebbles.end()));
  }
  const auto counts = report.final_distribution.counts();
  return {
      {"witness", report.witness},
      {"initial_pebbles", report.initial_pebbles},
      {"iterations", std::move(iterations)},
      {"final_distribution", std::move(values)},
      {"final_counts", std::vector<std::uint64_t>(counts.counts().begin(), counts.counts().end())},
      {"final_total_value", report.final_distribution.total_value()},
  };
}

}  // namespace covpeb
