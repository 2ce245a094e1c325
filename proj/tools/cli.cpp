#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "covpeb/collapse.hpp"
#include "covpeb/error.hpp"
#include "covpeb/families.hpp"
#include "covpeb/io.hpp"
#include "covpeb/oracle.hpp"
#include "covpeb/solver.hpp"

namespace covpeb::cli {

namespace {

using nlohmann::json;

struct GraphSource {
  std::string file;
  std::string family;
  std::uint64_t n = 0;
  std::string parts;
  std::string goal;

  void attach(CLI::App* cmd) {
    cmd->add_option("graph", file, "Graph JSON file");
    cmd->add_option("--family", family,
                    "Generated graph: path, cycle, even_cycle, odd_cycle, hypercube, complete, "
                    "complete_multipartite, wheel");
    cmd->add_option("--n", n, "Family size parameter (node count for cycles)");
    cmd->add_option("--parts", parts, "Part sizes for complete_multipartite, e.g. 3,2");
    cmd->add_option("--goal", goal, "Goal distribution, e.g. 1,2,1 (default: file goal or all ones)");
  }

  GraphDocument load() const {
    if (!file.empty() && !family.empty()) {
      throw Error(ErrorKind::Parse, "give either a graph file or --family, not both");
    }
    GraphDocument doc = file.empty() ? generate() : read_graph_file(file);
    if (!goal.empty()) {
      auto w = parse_counts(goal);
      require_size(doc.graph.node_count(), static_cast<std::uint32_t>(w.size()), "--goal");
      doc.goal.emplace(std::move(w));
    }
    return doc;
  }

 private:
  GraphDocument generate() const {
    if (family.empty()) throw Error(ErrorKind::Parse, "a graph file or --family is required");
    if (family == "cycle") {
      const auto kind = n % 2 == 0 ? FamilyKind::EvenCycle : FamilyKind::OddCycle;
      return {covpeb::family(kind, std::vector<std::uint64_t>{n}), std::nullopt};
    }
    const auto kind = parse_family_kind(family);
    if (!kind) throw Error(ErrorKind::Parse, "unknown family '" + family + "'");
    std::vector<std::uint64_t> params;
    if (*kind == FamilyKind::CompleteMultipartite) {
      if (parts.empty()) throw Error(ErrorKind::Parse, "complete_multipartite needs --parts");
      params = parse_counts(parts);
    } else {
      params = {n};
    }
    return {covpeb::family(*kind, params), std::nullopt};
  }
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Overflow:
    case ErrorKind::BudgetExceeded:
      return kLimitExceeded;
    case ErrorKind::ProofViolation:
      return kInternalError;
    default:
      return kInputError;
  }
}

void emit(std::ostream& out, const json& doc) { out << doc.dump() << '\n'; }

int cmd_gamma(const GraphSource& src, std::ostream& out) {
  const auto doc = src.load();
  emit(out, to_json(gamma(doc.graph, doc.goal_or_ones())));
  return kOk;
}

int cmd_coverable(const GraphSource& src, const std::string& dist_text, std::uint64_t max_states,
                  std::ostream& out) {
  const auto doc = src.load();
  const auto w = doc.goal_or_ones();
  Distribution dist(parse_counts(dist_text));
  require_size(doc.graph.node_count(), dist.size(), "--dist");
  SearchBudget budget{max_states};
  const auto decision = can_cover(doc.graph, dist, w, budget);
  auto result = to_json(decision);
  if (!decision.coverable) {
    emit(out, result);
    return kNegative;
  }
  auto reached = dist;
  for (auto [from, to] : *decision.witness_moves) reached = apply_move(reached, doc.graph, from, to);
  result["final_counts"] = std::vector<std::uint64_t>(reached.counts().begin(), reached.counts().end());
  emit(out, result);
  return kOk;
}

int cmd_collapse(const GraphSource& src, const std::string& dist_text, std::ostream& out) {
  const auto doc = src.load();
  const auto w = doc.goal_or_ones();
  Distribution dist(parse_counts(dist_text));
  require_size(doc.graph.node_count(), dist.size(), "--dist");
  const auto report = collapse_witness(doc.graph, dist, w);
  auto result = to_json(report);
  try {
    result["witness_cost"] = cost_from(doc.graph, w, report.witness);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Overflow) throw;
    result["witness_cost"] = nullptr;
  }
  emit(out, result);
  return kOk;
}

json verify_one(const Graph& g, const GoalDistribution& w, SearchBudget& budget) {
  const auto formula = gamma(g, w).gamma;
  const auto brute = brute_gamma(g, w, budget);
  return {{"brute", brute.gamma},
          {"formula", formula},
          {"match", brute.gamma == formula},
          {"states_visited", brute.states_visited}};
}

int cmd_verify(const GraphSource& src, std::uint32_t all_connected, std::uint64_t max_states,
               std::ostream& out) {
  if (all_connected > 0) {
    if (!src.file.empty() || !src.family.empty() || !src.goal.empty()) {
      throw Error(ErrorKind::Parse, "--all-connected takes no graph or goal");
    }
    json results = json::array();
    bool all_match = true;
    for (std::uint32_t n = 1; n <= all_connected; ++n) {
      for (const auto& g : connected_graphs(n)) {
        SearchBudget budget{max_states};
        auto entry = verify_one(g, GoalDistribution::ones(n), budget);
        all_match = all_match && entry["match"].get<bool>();
        entry["graph"] = to_json(g);
        results.push_back(std::move(entry));
      }
    }
    emit(out, {{"graphs", results.size()}, {"all_match", all_match}, {"results", std::move(results)}});
    return all_match ? kOk : kNegative;
  }
  const auto doc = src.load();
  SearchBudget budget{max_states};
  const auto result = verify_one(doc.graph, doc.goal_or_ones(), budget);
  emit(out, result);
  return result["match"].get<bool>() ? kOk : kNegative;
}

int cmd_product(const std::string& file1, const std::string& file2, const std::string& goal1,
                const std::string& goal2, std::ostream& out) {
  auto load = [](const std::string& file, const std::string& goal) {
    GraphSource src;
    src.file = file;
    src.goal = goal;
    auto doc = src.load();
    return std::make_pair(std::move(doc.graph), doc.goal_or_ones());
  };
  const auto [g1, w1] = load(file1, goal1);
  const auto [g2, w2] = load(file2, goal2);
  const auto check = product_gamma_check(g1, w1, g2, w2);
  const auto g = product(g1, g2);
  const auto w = product_goal(w1, w2);
  emit(out, {{"graph", to_json(g, &w)},
             {"goal", std::vector<std::uint64_t>(w.values().begin(), w.values().end())},
             {"lhs", check.lhs},
             {"rhs", check.rhs},
             {"match", check.equal}});
  return check.equal ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cover pebbling numbers, exhaustive verification and concentration witnesses",
               "covpeb"};
  app.require_subcommand(1);

  GraphSource gamma_src;
  auto* gamma_cmd = app.add_subcommand("gamma", "Cover pebbling number from simple distributions");
  gamma_src.attach(gamma_cmd);

  GraphSource cover_src;
  std::string cover_dist;
  std::uint64_t cover_budget = kDefaultMaxStates;
  auto* cover_cmd = app.add_subcommand("coverable", "Decide whether a distribution can reach a cover");
  cover_src.attach(cover_cmd);
  cover_cmd->add_option("--dist", cover_dist, "Initial distribution, e.g. 3,0")->required();
  cover_cmd->add_option("--max-states", cover_budget, "Search budget")->check(CLI::PositiveNumber);

  GraphSource collapse_src;
  std::string collapse_dist;
  auto* collapse_cmd = app.add_subcommand("collapse", "Run the chain-move collapse and report the witness");
  collapse_src.attach(collapse_cmd);
  collapse_cmd->add_option("--dist", collapse_dist, "Initial distribution, e.g. 0,2")->required();

  GraphSource verify_src;
  std::uint32_t verify_all = 0;
  std::uint64_t verify_budget = kDefaultMaxStates;
  auto* verify_cmd = app.add_subcommand("verify", "Compare the exhaustive number with the formula");
  verify_src.attach(verify_cmd);
  verify_cmd->add_option("--all-connected", verify_all,
                         "Sweep every connected graph on 1..N nodes with the 1-distribution")
      ->check(CLI::Range(1, 6));
  verify_cmd->add_option("--max-states", verify_budget, "Search budget per graph")
      ->check(CLI::PositiveNumber);

  std::string product_file1, product_file2, product_goal1, product_goal2;
  auto* product_cmd = app.add_subcommand("product", "Check the product law on two factor graphs");
  product_cmd->add_option("graph1", product_file1, "First factor JSON file")->required();
  product_cmd->add_option("graph2", product_file2, "Second factor JSON file")->required();
  product_cmd->add_option("--goal1", product_goal1, "Goal on the first factor");
  product_cmd->add_option("--goal2", product_goal2, "Goal on the second factor");

  std::vector<const char*> argv{"covpeb"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "covpeb: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (gamma_cmd->parsed()) return cmd_gamma(gamma_src, out);
    if (cover_cmd->parsed()) return cmd_coverable(cover_src, cover_dist, cover_budget, out);
    if (collapse_cmd->parsed()) return cmd_collapse(collapse_src, collapse_dist, out);
    if (verify_cmd->parsed()) return cmd_verify(verify_src, verify_all, verify_budget, out);
    if (product_cmd->parsed()) {
      return cmd_product(product_file1, product_file2, product_goal1, product_goal2, out);
    }
  } catch (const Error& e) {
    err << "covpeb: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kInputError;
}

}  // namespace covpeb::cli
