#include "qdtough/family.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "qdtough/error.hpp"

namespace qdtough {

ExtremalSpec::ExtremalSpec(std::size_t hub, std::vector<std::size_t> parts, std::optional<std::size_t> p)
    : hub_(hub), parts_(std::move(parts)), p_(p) {
  if (hub_ == 0 && parts_.empty()) throw Error(ErrorKind::InvalidSpec, "empty family: s = 0 and no parts");
  if (std::any_of(parts_.begin(), parts_.end(), [](std::size_t k) { return k == 0; })) {
    throw Error(ErrorKind::InvalidSpec, "family parts must be positive");
  }
  if (p_ && *p_ == 0) throw Error(ErrorKind::InvalidSpec, "p must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

ExtremalSpec ExtremalSpec::min_degree_family(std::size_t n, std::size_t delta) {
  if (delta == 0 || n <= 2 * delta) {
    throw Error(ErrorKind::InvalidSpec, "K_d v (K_{n-2d} + d K_1) needs d >= 1 and n > 2d");
  }
  std::vector<std::size_t> parts{n - 2 * delta};
  parts.insert(parts.end(), delta, 1);
  return ExtremalSpec(delta, std::move(parts));
}

ExtremalSpec ExtremalSpec::fractional_family(std::size_t n, std::size_t q) {
  if (q == 0 || n < q + 2) throw Error(ErrorKind::InvalidSpec, "K_1 v (K_{n-q-1} + q K_1) needs q >= 1 and n >= q + 2");
  std::vector<std::size_t> parts{n - q - 1};
  parts.insert(parts.end(), q, 1);
  return ExtremalSpec(1, std::move(parts));
}

std::size_t ExtremalSpec::order() const {
  return hub_ + std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

std::size_t ExtremalSpec::edge_count() const {
  const std::size_t n = order();
  std::size_t m = hub_ * (hub_ - (hub_ > 0 ? 1 : 0)) / 2 + hub_ * (n - hub_);
  for (std::size_t k : parts_) m += k * (k - 1) / 2;
  return m;
}

std::size_t ExtremalSpec::min_degree() const {
  if (parts_.size() <= 1) return order() - 1;
  return hub_ + parts_.back() - 1;
}

std::string ExtremalSpec::to_string() const {
  std::ostringstream os;
  os << "K_" << hub_ << " v (";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? " + " : "") << "K_" << parts_[i];
  os << ")";
  return os.str();
}

std::vector<std::vector<Vertex>> family_blocks(const ExtremalSpec& spec) {
  std::vector<std::vector<Vertex>> blocks;
  Vertex next = 0;
  auto take = [&](std::size_t count) {
    std::vector<Vertex> block(count);
    std::iota(block.begin(), block.end(), next);
    next += static_cast<Vertex>(count);
    return block;
  };
  blocks.push_back(take(spec.hub()));
  for (std::size_t k : spec.parts()) blocks.push_back(take(k));
  return blocks;
}

Graph build_family(const ExtremalSpec& spec) {
  const std::size_t n = spec.order();
  Graph g(n);
  const auto blocks = family_blocks(spec);
  for (Vertex h : blocks.front()) {
    for (Vertex v = 0; v < n; ++v) {
      if (v != h) g.add_edge(h, v);
    }
  }
  for (std::size_t b = 1; b < blocks.size(); ++b) {
    const auto& block = blocks[b];
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) g.add_edge(block[i], block[j]);
  }
  return g;
}

bool recognize_family(const Graph& g, const ExtremalSpec& spec) {
  const std::size_t n = g.order();
  if (n != spec.order() || g.size() != spec.edge_count()) return false;
  if (spec.part_count() <= 1) return g.is_complete();

  std::vector<Vertex> universal;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) + 1 == n) universal.push_back(v);
  }
  if (universal.size() != spec.hub()) return false;

  const Subgraph rest = delete_vertices(g, universal);
  std::vector<std::size_t> sizes;
  for (const auto& block : components(rest.graph)) {
    std::size_t inner = 0;
    for (Vertex v : block) inner += rest.graph.degree(v);
    if (inner != block.size() * (block.size() - 1)) return false;  // not a clique
    sizes.push_back(block.size());
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes == spec.parts();
}

}  // namespace qdtough
