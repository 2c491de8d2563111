// Independent reference implementations used only by tests. They share no
// code paths with the library beyond the Graph container.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qdtough/graph.hpp"
#include "qdtough/rational.hpp"

namespace oracle {

using qdtough::Graph;
using qdtough::Rational;
using qdtough::Vertex;

inline std::vector<std::vector<bool>> adjacency(const Graph& g) {
  std::vector<std::vector<bool>> a(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

// Floyd-Warshall; -1 marks unreachable pairs.
inline std::vector<std::vector<long>> distances(const Graph& g) {
  const std::size_t n = g.order();
  constexpr long kInf = 1L << 40;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, kInf));
  const auto a = adjacency(g);
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j]) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= kInf) x = -1;
  return d;
}

inline long wiener(const Graph& g) {
  const auto d = distances(g);
  long w = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) w += d[i][j];
  return w;
}

inline Eigen::MatrixXd dsl(const Graph& g) {
  const auto d = distances(g);
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd q(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    double tr = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      q(i, j) = static_cast<double>(d[i][j]);
      tr += q(i, j);
    }
    q(i, i) = tr;
  }
  return q;
}

// Largest eigenvalue of the symmetric matrix by dense eigensolve.
inline double eta1(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dsl(g), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

// Largest real eigenvalue of a general square matrix.
inline double largest_real_eigenvalue(const Eigen::MatrixXd& m) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
  double best = -1e300;
  for (const auto& ev : solver.eigenvalues())
    if (std::abs(ev.imag()) < 1e-9 * (1 + std::abs(ev.real()))) best = std::max(best, ev.real());
  return best;
}

inline std::size_t components_without(const std::vector<std::vector<bool>>& a, std::uint64_t removed) {
  const std::size_t n = a.size();
  std::vector<int> seen(n, 0);
  std::size_t count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if ((removed >> s) & 1 || seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (a[u][v] && !seen[v] && !((removed >> v) & 1)) {
          seen[v] = 1;
          stack.push_back(v);
        }
    }
  }
  return count;
}

struct NaiveToughness {
  std::optional<Rational> tau;        // nullopt means infinite
  std::optional<Rational> tau_prime;  // nullopt means infinite
};

// Every subset S with c(G - S) >= 2, no pruning.
inline NaiveToughness naive_toughness(const Graph& g) {
  const auto a = adjacency(g);
  const std::size_t n = g.order();
  NaiveToughness out;
  for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << n); ++s) {
    const std::size_t c = components_without(a, s);
    if (c < 2) continue;
    const auto k = static_cast<std::int64_t>(std::popcount(s));
    const Rational r(k, static_cast<std::int64_t>(c));
    const Rational rp(k, static_cast<std::int64_t>(c - 1));
    if (!out.tau || r < *out.tau) out.tau = r;
    if (!out.tau_prime || rp < *out.tau_prime) out.tau_prime = rp;
  }
  return out;
}

// Brute-force isomorphism for small orders.
inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<std::size_t> dg, dh;
  for (Vertex v = 0; v < g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!h.has_edge(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Canonical adjacency string: colour refinement, then the lexicographically
// smallest upper triangle over all cell-respecting orderings.
inline std::string canonical_form(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> colour(n, 0);
  for (std::size_t round = 0; round <= n; ++round) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(colour[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<std::size_t> refined(n);
    for (Vertex v = 0; v < n; ++v) refined[v] = ids[sig[v]];
    const bool stable = std::set<std::size_t>(refined.begin(), refined.end()).size() ==
                        std::set<std::size_t>(colour.begin(), colour.end()).size();
    colour = refined;
    if (stable) break;
  }
  std::vector<std::vector<Vertex>> cells;
  {
    std::map<std::size_t, std::vector<Vertex>> by;
    for (Vertex v = 0; v < n; ++v) by[colour[v]].push_back(v);
    for (auto& [c, vs] : by) cells.push_back(vs);
  }
  std::string best;
  std::vector<Vertex> order;
  std::function<void(std::size_t)> rec = [&](std::size_t cell) {
    if (cell == cells.size()) {
      std::string s;
      s.reserve(n * (n - 1) / 2);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s.push_back(g.has_edge(order[i], order[j]) ? '1' : '0');
      if (best.empty() || s < best) best = s;
      return;
    }
    auto vs = cells[cell];
    std::sort(vs.begin(), vs.end());
    do {
      order.insert(order.end(), vs.begin(), vs.end());
      rec(cell + 1);
      order.resize(order.size() - vs.size());
    } while (std::next_permutation(vs.begin(), vs.end()));
  };
  rec(0);
  return std::to_string(n) + ":" + best;
}

// All connected graphs on n vertices up to isomorphism, n >= 1. Every
// connected graph has a vertex whose deletion leaves it connected, so growing
// connected graphs one vertex at a time reaches all of them.
inline std::vector<Graph> connected_graphs(std::size_t n) {
  std::vector<Graph> level{Graph(1)};
  for (std::size_t order = 2; order <= n; ++order) {
    std::map<std::string, Graph> seen;
    for (const Graph& base : level) {
      for (std::uint32_t mask = 1; mask < (1u << (order - 1)); ++mask) {
        Graph g(order);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (Vertex v = 0; v + 1 < order; ++v)
          if ((mask >> v) & 1) g.add_edge(v, static_cast<Vertex>(order - 1));
        seen.emplace(canonical_form(g), std::move(g));
      }
    }
    level.clear();
    for (auto& [key, g] : seen) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace oracle
