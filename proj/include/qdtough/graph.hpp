#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qdtough/rational.hpp"

namespace qdtough {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adj_.size(); }
  std::size_t size() const { return edge_count_; }

  /// Adds {u,v}. Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  /// Removes {u,v}. Returns false if the edge was absent.
  bool remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  std::size_t min_degree() const;
  bool is_complete() const;

  /// Edges (u,v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Graph with vertex v renamed perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

/// Induced subgraph together with the original index of each new vertex.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;
};

/// Exact hop-count distance table of a connected graph, row-major.
class DistanceTable {
 public:
  DistanceTable(std::size_t n, std::vector<std::uint32_t> d) : n_(n), d_(std::move(d)) {}

  std::size_t order() const { return n_; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  std::span<const std::uint32_t> row(std::size_t i) const { return {d_.data() + i * n_, n_}; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> d_;
};

/// A vertex cut S with c(G - S) >= 2. `ratio` is |S|/c for toughness and
/// |S|/(c - 1) for the primed variant.
struct CutWitness {
  std::vector<Vertex> cut;
  std::size_t components = 0;
  Rational ratio;

  friend bool operator==(const CutWitness&, const CutWitness&) = default;
};

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_bipartite(std::size_t a, std::size_t b);

/// G - S with dense reindexing. Throws EmptyResult when S covers V(G).
Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);

/// BFS from every vertex. Throws Disconnected if some pair is unreachable.
DistanceTable all_pairs_distances(const Graph& g);

/// Throws Disconnected with `what` as context when g is not connected.
void require_connected(const Graph& g, const char* what);

}  // namespace qdtough
