#include "qdtough/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "qdtough/error.hpp"

namespace qdtough {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order()) {
    throw Error(ErrorKind::InvalidArgument,
                "edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
  }
  if (u == v) throw Error(ErrorKind::InvalidArgument, "self-loop at " + std::to_string(u));
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order() || u == v) return false;
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it == nu.end() || *it != v) return false;
  nu.erase(it);
  auto& nv = adj_[v];
  nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
  --edge_count_;
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::size_t Graph::min_degree() const {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& nbrs : adj_) best = std::min(best, nbrs.size());
  return adj_.empty() ? 0 : best;
}

bool Graph::is_complete() const {
  const std::size_t n = order();
  return edge_count_ == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != order()) throw Error(ErrorKind::InvalidArgument, "permutation size mismatch");
  Graph out(order());
  for (const auto& [u, v] : edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) g.add_edge(u, static_cast<Vertex>(a + v));
  return g;
}

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  const std::size_t n = g.order();
  std::vector<bool> gone(n, false);
  for (Vertex v : removed) {
    if (v >= n) throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " not in graph");
    gone[v] = true;
  }
  Subgraph out;
  std::vector<Vertex> index(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (!gone[v]) {
      index[v] = static_cast<Vertex>(out.original.size());
      out.original.push_back(v);
    }
  }
  if (out.original.empty()) throw Error(ErrorKind::EmptyResult, "deleting every vertex leaves no graph");
  out.graph = Graph(out.original.size());
  for (const auto& [u, v] : g.edges()) {
    if (!gone[u] && !gone[v]) out.graph.add_edge(index[u], index[v]);
  }
  return out;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    auto& block = out.emplace_back();
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      block.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
  }
  return out;
}

std::size_t component_count(const Graph& g) { return components(g).size(); }

bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw Error(ErrorKind::Disconnected, std::string(what) + " requires a connected graph");
  }
}

DistanceTable all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> d(n * n, kUnseen);
  std::vector<Vertex> queue(n);
  for (Vertex src = 0; src < n; ++src) {
    std::uint32_t* row = d.data() + static_cast<std::size_t>(src) * n;
    row[src] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = src;
    while (head < tail) {
      const Vertex v = queue[head++];
      for (Vertex w : g.neighbors(v)) {
        if (row[w] == kUnseen) {
          row[w] = row[v] + 1;
          queue[tail++] = w;
        }
      }
    }
    if (tail != n) throw Error(ErrorKind::Disconnected, "distances are undefined on a disconnected graph");
  }
  return DistanceTable(n, std::move(d));
}

}  // namespace qdtough
