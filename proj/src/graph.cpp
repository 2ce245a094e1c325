#include "covpeb/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "covpeb/error.hpp"

namespace covpeb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::InvalidEdge: return "InvalidEdge";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::MixedDirectedness: return "MixedDirectedness";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InsufficientPebbles: return "InsufficientPebbles";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::ValueNotPresent: return "ValueNotPresent";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ProofViolation: return "ProofViolation";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::size_t reached_count(const std::vector<std::vector<Node>>& adj) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<Node> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Node v = stack.back();
    stack.pop_back();
    for (Node u : adj[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count;
}

}  // namespace

Graph::Graph(std::uint32_t node_count, bool directed, std::span<const Edge> edges)
    : directed_(directed) {
  if (node_count == 0 || node_count > kMaxNodes) {
    throw Error(ErrorKind::BadParams,
                "node count must be in 1.." + std::to_string(kMaxNodes) + ", got " +
                    std::to_string(node_count));
  }
  out_.resize(node_count);
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw Error(ErrorKind::InvalidEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                              ") references a node outside 0.." +
                                              std::to_string(node_count - 1));
    }
    if (u == v) {
      throw Error(ErrorKind::InvalidEdge, "self-loop at node " + std::to_string(u));
    }
    out_[u].push_back(v);
    if (!directed_) out_[v].push_back(u);
  }
  for (auto& nbrs : out_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }

  if (reached_count(out_) != node_count) {
    throw Error(ErrorKind::NotConnected, "graph is not connected");
  }
  if (directed_) {
    std::vector<std::vector<Node>> reversed(node_count);
    for (Node v = 0; v < node_count; ++v) {
      for (Node u : out_[v]) reversed[u].push_back(v);
    }
    if (reached_count(reversed) != node_count) {
      throw Error(ErrorKind::NotConnected, "digraph is not strongly connected");
    }
  }
}

bool Graph::has_edge(Node from, Node to) const {
  if (from >= node_count() || to >= node_count()) return false;
  const auto& nbrs = out_[from];
  return std::binary_search(nbrs.begin(), nbrs.end(), to);
}

std::vector<Edge> Graph::arcs() const {
  std::vector<Edge> out;
  for (Node v = 0; v < node_count(); ++v) {
    for (Node u : out_[v]) out.emplace_back(v, u);
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  if (directed_) return arcs();
  std::vector<Edge> out;
  for (Node v = 0; v < node_count(); ++v) {
    for (Node u : out_[v]) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t arcs = 0;
  for (const auto& nbrs : out_) arcs += nbrs.size();
  return directed_ ? arcs : arcs / 2;
}

Graph build_graph(std::uint32_t node_count, bool directed, std::span<const Edge> edges) {
  return Graph(node_count, directed, edges);
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Node source) {
  std::vector<std::uint32_t> dist(g.node_count(), kUnreached);
  std::queue<Node> queue;
  dist.at(source) = 0;
  queue.push(source);
  while (!queue.empty()) {
    Node v = queue.front();
    queue.pop();
    for (Node u : g.neighbors(v)) {
      if (dist[u] == kUnreached) {
        dist[u] = dist[v] + 1;
        queue.push(u);
      }
    }
  }
  return dist;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.node_count()) {
  d_.reserve(std::size_t{n_} * n_);
  for (Node v = 0; v < n_; ++v) {
    auto row = bfs_distances(g, v);
    d_.insert(d_.end(), row.begin(), row.end());
  }
}

DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

std::vector<Node> shortest_path(const Graph& g, Node from, Node to) {
  const auto n = g.node_count();
  if (from >= n || to >= n) {
    throw Error(ErrorKind::BadParams, "shortest_path: node out of range");
  }
  std::vector<Node> parent(n, kUnreached);
  std::queue<Node> queue;
  parent[from] = from;
  queue.push(from);
  while (!queue.empty() && parent[to] == kUnreached) {
    Node v = queue.front();
    queue.pop();
    for (Node u : g.neighbors(v)) {
      if (parent[u] == kUnreached) {
        parent[u] = v;
        queue.push(u);
      }
    }
  }
  std::vector<Node> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

Graph product(const Graph& g1, const Graph& g2) {
  if (g1.directed() != g2.directed()) {
    throw Error(ErrorKind::MixedDirectedness,
                "product factors must be both directed or both undirected");
  }
  const std::uint64_t n1 = g1.node_count();
  const std::uint64_t n2 = g2.node_count();
  if (n1 * n2 > kMaxNodes) {
    throw Error(ErrorKind::BadParams, "product exceeds the node count cap");
  }
  const auto size2 = static_cast<std::uint32_t>(n2);
  std::vector<Edge> arcs;
  for (Node a = 0; a < n1; ++a) {
    for (Node b = 0; b < n2; ++b) {
      const Node from = product_node(a, b, size2);
      for (Node b2 : g2.neighbors(b)) arcs.emplace_back(from, product_node(a, b2, size2));
      for (Node a2 : g1.neighbors(a)) arcs.emplace_back(from, product_node(a2, b, size2));
    }
  }
  // Arcs already include both orientations for undirected factors.
  return Graph(static_cast<std::uint32_t>(n1 * n2), g1.directed(), arcs);
}

Graph relabel(const Graph& g, std::span<const Node> perm) {
  if (perm.size() != g.node_count()) {
    throw Error(ErrorKind::DimensionMismatch, "relabel: permutation size differs from node count");
  }
  std::vector<Edge> arcs;
  for (auto [u, v] : g.arcs()) arcs.emplace_back(perm[u], perm[v]);
  return Graph(g.node_count(), g.directed(), arcs);
}

std::vector<Graph> connected_graphs(std::uint32_t n) {
  if (n == 0 || n > 6) {
    throw Error(ErrorKind::BadParams, "connected_graphs supports 1..6 nodes");
  }
  std::vector<Edge> slots;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  std::vector<std::vector<int>> slot_index(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < slots.size(); ++i) {
    slot_index[slots[i].first][slots[i].second] = static_cast<int>(i);
    slot_index[slots[i].second][slots[i].first] = static_cast<int>(i);
  }
  std::vector<std::vector<Node>> perms;
  std::vector<Node> perm(n);
  std::iota(perm.begin(), perm.end(), Node{0});
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  const std::uint32_t masks = std::uint32_t{1} << slots.size();
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    // Canonical form: smallest mask over all relabellings.
    std::uint32_t canonical = mask;
    for (const auto& p : perms) {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (mask >> i & 1u) image |= 1u << slot_index[p[slots[i].first]][p[slots[i].second]];
      }
      canonical = std::min(canonical, image);
    }
    if (!seen.insert(canonical).second) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (canonical >> i & 1u) edges.push_back(slots[i]);
    }
    try {
      out.emplace_back(n, false, edges);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotConnected) throw;
    }
  }
  return out;
}

}  // namespace covpeb
