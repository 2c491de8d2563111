#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qdtough/graph.hpp"

namespace qdtough {

/// Platform-independent draws on top of mt19937_64. The standard
/// distributions are implementation-defined, so they are avoided wherever a
/// result must be reproducible from a seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Seed for sub-stream `index` of `master`.
  static std::uint64_t derive(std::uint64_t master, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  /// Uniform in [0, 1).
  double unit();
  bool bernoulli(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng);

/// G(n, p) resampled until connected.
Graph random_connected_graph(std::size_t n, double p, Rng& rng);

/// Random spanning tree plus each remaining pair with probability p.
Graph random_tree_plus(std::size_t n, double p, Rng& rng);

/// An edge whose removal keeps g connected, if any.
std::optional<Edge> random_removable_edge(const Graph& g, Rng& rng);

}  // namespace qdtough
