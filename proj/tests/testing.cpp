#include "testing.hpp"

#include <algorithm>
#include <numeric>

#include "covpeb/error.hpp"
#include "covpeb/families.hpp"

namespace covpeb::testing {

Graph figure1_digraph() {
  const std::vector<Edge> edges{{4, 3}, {3, 2}, {2, 0}, {2, 1}, {0, 4}, {1, 4}};
  return Graph(5, true, edges);
}

Graph path(std::uint32_t n) { return family(FamilyKind::Path, std::vector<std::uint64_t>{n}); }

Graph cycle(std::uint32_t n) {
  return family(n % 2 == 0 ? FamilyKind::EvenCycle : FamilyKind::OddCycle,
                std::vector<std::uint64_t>{n});
}

Graph complete(std::uint32_t n) {
  return family(FamilyKind::Complete, std::vector<std::uint64_t>{n});
}

std::vector<std::vector<std::uint64_t>> floyd_warshall(const Graph& g) {
  const auto n = g.node_count();
  constexpr std::uint64_t kInf = std::uint64_t{1} << 31;
  std::vector<std::vector<std::uint64_t>> d(n, std::vector<std::uint64_t>(n, kInf));
  for (Node v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.arcs()) d[u][v] = 1;
  for (Node k = 0; k < n; ++k)
    for (Node i = 0; i < n; ++i)
      for (Node j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

std::uint64_t brute_cost(const Graph& g, const GoalDistribution& w, Node v) {
  const auto d = floyd_warshall(g);
  std::uint64_t sum = 0;
  for (Node u = 0; u < g.node_count(); ++u) sum += w[u] * (std::uint64_t{1} << d[v][u]);
  return sum;
}

Graph random_graph(std::mt19937_64& rng, std::uint32_t n, bool directed, double p) {
  std::bernoulli_distribution keep(p);
  while (true) {
    std::vector<Edge> edges;
    for (Node u = 0; u < n; ++u) {
      for (Node v = directed ? 0 : u + 1; v < n; ++v) {
        if (u != v && keep(rng)) edges.emplace_back(u, v);
      }
    }
    try {
      return Graph(n, directed, edges);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotConnected) throw;
    }
  }
}

GoalDistribution random_goal(std::mt19937_64& rng, std::uint32_t n, std::uint64_t max_entry) {
  std::uniform_int_distribution<std::uint64_t> entry(1, max_entry);
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) x = entry(rng);
  return GoalDistribution(std::move(w));
}

Distribution random_distribution(std::mt19937_64& rng, std::uint32_t n, std::uint64_t total) {
  std::uniform_int_distribution<Node> node(0, n - 1);
  std::vector<std::uint64_t> counts(n, 0);
  for (std::uint64_t i = 0; i < total; ++i) ++counts[node(rng)];
  return Distribution(std::move(counts));
}

std::vector<Node> random_permutation(std::mt19937_64& rng, std::uint32_t n) {
  std::vector<Node> perm(n);
  std::iota(perm.begin(), perm.end(), Node{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

std::vector<Graph> small_connected_graphs() {
  std::vector<Graph> out;
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (auto& g : connected_graphs(n)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace covpeb::testing
