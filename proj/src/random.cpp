#include "qdtough/random.hpp"

#include <numeric>

#include "qdtough/error.hpp"

namespace qdtough {

std::uint64_t Rng::derive(std::uint64_t master, std::uint64_t index) {
  // splitmix64 over the pair
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorKind::InvalidArgument, "empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(ErrorKind::InvalidArgument, "empty range");
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  rng.shuffle(perm);
  return perm;
}

Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "graph needs a vertex");
  for (;;) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.bernoulli(p)) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
}

Graph random_tree_plus(std::size_t n, double p, Rng& rng) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "graph needs a vertex");
  Graph g(n);
  const auto order = random_permutation(n, rng);
  for (std::size_t i = 1; i < n; ++i) g.add_edge(order[i], order[rng.below(i)]);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v) && rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

std::optional<Edge> random_removable_edge(const Graph& g, Rng& rng) {
  auto edges = g.edges();
  rng.shuffle(edges);
  Graph h = g;
  for (const auto& [u, v] : edges) {
    h.remove_edge(u, v);
    if (is_connected(h)) return Edge{u, v};
    h.add_edge(u, v);
  }
  return std::nullopt;
}

}  // namespace qdtough
