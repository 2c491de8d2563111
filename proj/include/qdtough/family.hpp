#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qdtough/graph.hpp"

namespace qdtough {

/// Parameters of K_s v (K_{n_1} + ... + K_{n_c}).
///
/// Parts are kept sorted non-increasing. `p` is the optional common size of
/// the small parts used by the family-comparison checks.
class ExtremalSpec {
 public:
  /// Throws InvalidSpec when s = 0 and there are no parts, or a part is 0.
  ExtremalSpec(std::size_t hub, std::vector<std::size_t> parts,
               std::optional<std::size_t> p = std::nullopt);

  /// K_delta v (K_{n-2delta} + delta K_1).
  static ExtremalSpec min_degree_family(std::size_t n, std::size_t delta);
  /// K_1 v (K_{n-q-1} + q K_1).
  static ExtremalSpec fractional_family(std::size_t n, std::size_t q);

  std::size_t hub() const { return hub_; }
  const std::vector<std::size_t>& parts() const { return parts_; }
  std::size_t part_count() const { return parts_.size(); }
  const std::optional<std::size_t>& p() const { return p_; }
  std::size_t order() const;
  std::size_t edge_count() const;
  /// Minimum degree of the built graph.
  std::size_t min_degree() const;

  std::string to_string() const;

  friend bool operator==(const ExtremalSpec&, const ExtremalSpec&) = default;

 private:
  std::size_t hub_;
  std::vector<std::size_t> parts_;
  std::optional<std::size_t> p_;
};

/// Vertices 0..s-1 are the hub clique; the parts follow in order.
Graph build_family(const ExtremalSpec& spec);

/// Index ranges of the hub and of each part in build_family's layout.
std::vector<std::vector<Vertex>> family_blocks(const ExtremalSpec& spec);

/// True iff g is isomorphic to build_family(spec).
///
/// Structural test: the universal vertices must number exactly s (or the
/// graph must be complete when c <= 1) and removing them must leave a
/// disjoint union of cliques whose sizes match the parts.
bool recognize_family(const Graph& g, const ExtremalSpec& spec);

}  // namespace qdtough
