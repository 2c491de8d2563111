#include "qdtough/toughness.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "qdtough/error.hpp"

namespace qdtough {

const char* to_string(ToughnessVariant variant) noexcept {
  return variant == ToughnessVariant::Tau ? "tau" : "tau-prime";
}

namespace {

using Mask = std::uint32_t;
constexpr std::size_t kMaxMaskOrder = 32;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= Mask{1} << w;
  return adj;
}

// Components of the subgraph induced by `alive`, counting stops as soon as
// `enough` is reached or can no longer be reached.
std::size_t count_components(Mask alive, const std::vector<Mask>& adj, std::size_t enough) {
  std::size_t count = 0;
  while (alive != 0) {
    if (enough != SIZE_MAX && count + static_cast<std::size_t>(std::popcount(alive)) < enough) return count;
    Mask frontier = alive & (~alive + 1);
    Mask comp = frontier;
    while (frontier != 0) {
      Mask next = 0;
      do {
        next |= adj[std::countr_zero(frontier)];
        frontier &= frontier - 1;
      } while (frontier != 0);
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    alive &= ~comp;
    if (++count >= enough) return count;
  }
  return count;
}

std::size_t count_all_components(Mask alive, const std::vector<Mask>& adj) {
  return count_components(alive, adj, SIZE_MAX);
}

// Next subset with the same popcount in increasing numeric order.
Mask next_combination(Mask x) {
  const Mask low = x & (~x + 1);
  const Mask ripple = x + low;
  return ripple | (((x ^ ripple) >> 2) / low);
}

std::vector<Vertex> mask_vertices(Mask m) {
  std::vector<Vertex> out;
  while (m != 0) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

void check_oracle_input(const Graph& g, const OracleOptions& options) {
  if (g.order() > options.max_order || g.order() > kMaxMaskOrder) {
    throw Error(ErrorKind::Capacity, "toughness oracle refuses n = " + std::to_string(g.order()) +
                                         " (cap " + std::to_string(std::min(options.max_order, kMaxMaskOrder)) +
                                         ")");
  }
  require_connected(g, "toughness");
}

struct Best {
  bool found = false;
  std::uint64_t size = 0;   // |S|
  std::uint64_t denom = 1;  // c or c - 1
  Mask cut = 0;
  std::size_t components = 0;

  // Strictly better than the current best |S|/denom.
  bool improves(std::uint64_t k, std::uint64_t d) const { return !found || k * denom < size * d; }
  // No set of size k can do better than k / max_denom.
  bool exhausted(std::uint64_t k, std::uint64_t max_denom) const {
    return found && max_denom > 0 && k * denom >= size * max_denom;
  }

  std::optional<CutWitness> witness() const {
    if (!found) return std::nullopt;
    return CutWitness{mask_vertices(cut), components,
                      Rational(static_cast<std::int64_t>(size), static_cast<std::int64_t>(denom))};
  }
  ExtRational value() const {
    if (!found) return ExtRational::infinity();
    return Rational(static_cast<std::int64_t>(size), static_cast<std::int64_t>(denom));
  }
};

}  // namespace

ToughnessReport toughness_exact(const Graph& g, const OracleOptions& options) {
  check_oracle_input(g, options);
  ToughnessReport report;
  const std::size_t n = g.order();
  if (g.is_complete()) return report;

  const auto adj = adjacency_masks(g);
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  Best tau;
  Best prime;

  for (std::size_t k = 1; k + 2 <= n; ++k) {
    if (options.pruned && tau.exhausted(k, n - k) && prime.exhausted(k, n - k - 1)) break;
    const Mask last = ((Mask{1} << k) - 1) << (n - k);
    for (Mask s = (Mask{1} << k) - 1;; s = next_combination(s)) {
      const std::size_t c = count_all_components(all & ~s, adj);
      ++report.subsets_examined;
      if (c >= 2) {
        if (tau.improves(k, c)) tau = {true, k, c, s, c};
        if (prime.improves(k, c - 1)) prime = {true, k, c - 1, s, c};
      }
      if (s == last) break;
    }
  }
  report.tau = tau.value();
  report.tau_prime = prime.value();
  report.tau_witness = tau.witness();
  report.tau_prime_witness = prime.witness();
  return report;
}

TToughResult is_t_tough(const Graph& g, const Rational& t, ToughnessVariant variant, const OracleOptions& options) {
  if (t <= Rational(0)) throw Error(ErrorKind::InvalidArgument, "t must be positive");
  check_oracle_input(g, options);
  TToughResult result;
  const std::size_t n = g.order();
  if (g.is_complete()) return result;

  const auto adj = adjacency_masks(g);
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  const __int128 tn = t.num();
  const __int128 td = t.den();
  const std::size_t offset = variant == ToughnessVariant::Tau ? 0 : 1;

  for (std::size_t k = 1; k + 2 <= n; ++k) {
    // Violation needs t * (c - offset) > k with c <= n - k.
    const auto max_c = static_cast<__int128>(n - k);
    if (tn * (max_c - static_cast<__int128>(offset)) <= static_cast<__int128>(k) * td) break;
    // Smallest c with t (c - offset) > k, and at least 2.
    const __int128 kd = static_cast<__int128>(k) * td;
    __int128 need = kd / tn + 1 + static_cast<__int128>(offset);
    if (need < 2) need = 2;
    const auto needed = static_cast<std::size_t>(need);

    const Mask last = ((Mask{1} << k) - 1) << (n - k);
    for (Mask s = (Mask{1} << k) - 1;; s = next_combination(s)) {
      ++result.subsets_examined;
      const std::size_t c = count_components(all & ~s, adj, needed);
      if (c >= needed) {
        const std::size_t total = count_all_components(all & ~s, adj);
        result.tough = false;
        result.violation = CutWitness{mask_vertices(s), total,
                                      Rational(static_cast<std::int64_t>(k),
                                               static_cast<std::int64_t>(total - offset))};
        return result;
      }
      if (s == last) break;
    }
  }
  return result;
}

}  // namespace qdtough
