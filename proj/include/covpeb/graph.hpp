#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace covpeb {

using Node = std::uint32_t;
using Edge = std::pair<Node, Node>;

inline constexpr std::uint32_t kMaxNodes = std::uint32_t{1} << 20;

/// Finite connected graph on nodes 0..n-1. Undirected graphs keep both
/// orientations of every edge so traversal code only ever sees arcs.
///
/// Construction validates ids, rejects self-loops and checks connectivity
/// (strong connectivity for digraphs). Instances are immutable.
class Graph {
 public:
  /// Duplicate edges collapse; for undirected graphs (u,v) and (v,u) name
  /// the same edge. Throws Error{BadParams, InvalidEdge, NotConnected}.
  Graph(std::uint32_t node_count, bool directed, std::span<const Edge> edges);

  std::uint32_t node_count() const noexcept { return static_cast<std::uint32_t>(out_.size()); }
  bool directed() const noexcept { return directed_; }

  /// Out-neighbours of v in ascending id order.
  std::span<const Node> neighbors(Node v) const { return out_.at(v); }
  bool has_edge(Node from, Node to) const;

  /// All arcs (both orientations for undirected graphs), sorted.
  std::vector<Edge> arcs() const;
  /// Edges as given to a file: arcs for digraphs, u<v pairs otherwise.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  bool directed_;
  std::vector<std::vector<Node>> out_;
};

Graph build_graph(std::uint32_t node_count, bool directed, std::span<const Edge> edges);

class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  std::uint32_t size() const noexcept { return n_; }
  std::uint32_t operator()(Node from, Node to) const { return d_[std::size_t{from} * n_ + to]; }
  std::span<const std::uint32_t> row(Node from) const {
    return {d_.data() + std::size_t{from} * n_, n_};
  }

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> d_;
};

DistanceMatrix distance_matrix(const Graph& g);

/// Hop distances from one source; every entry is finite on a valid graph.
std::vector<std::uint32_t> bfs_distances(const Graph& g, Node source);

/// One minimal path from -> to inclusive of both ends. Breadth-first search
/// scanning neighbours in ascending order, first discovery wins, so ties
/// resolve toward lower ids.
std::vector<Node> shortest_path(const Graph& g, Node from, Node to);

/// Cartesian product. Node (a,b) is encoded as a * |V(g2)| + b.
Graph product(const Graph& g1, const Graph& g2);

inline Node product_node(Node a, Node b, std::uint32_t second_size) { return a * second_size + b; }

/// Same graph with node v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Node> perm);

/// One representative per isomorphism class of connected undirected graphs
/// on exactly n nodes (1 <= n <= 6), in a deterministic order.
std::vector<Graph> connected_graphs(std::uint32_t n);

}  // namespace covpeb
