#pragma once

#include <cstddef>
#include <optional>

#include "qdtough/graph.hpp"
#include "qdtough/rational.hpp"

namespace qdtough {

/// tau minimises |S|/c(G-S); tau' minimises |S|/(c(G-S)-1).
enum class ToughnessVariant { Tau, TauPrime };

const char* to_string(ToughnessVariant variant) noexcept;

struct OracleOptions {
  /// Largest order the oracle accepts. Enumeration is exponential in n.
  std::size_t max_order = 24;
  /// Disable to scan every subset (reference mode for the pruned scan).
  bool pruned = true;
};

struct ToughnessReport {
  ExtRational tau = ExtRational::infinity();
  ExtRational tau_prime = ExtRational::infinity();
  std::optional<CutWitness> tau_witness;
  std::optional<CutWitness> tau_prime_witness;
  /// Number of subsets whose component count was evaluated.
  std::size_t subsets_examined = 0;

  bool same_values(const ToughnessReport& other) const {
    return tau == other.tau && tau_prime == other.tau_prime && tau_witness == other.tau_witness &&
           tau_prime_witness == other.tau_prime_witness;
  }
};

/// Exact tau and tau' by enumerating vertex subsets in order of increasing
/// size (colex order within a size). Witnesses are the first minimisers met.
/// Once |S|/(n-|S|) reaches the current minimum no larger set can improve it,
/// and the scan stops. Throws Capacity above max_order, Disconnected.
ToughnessReport toughness_exact(const Graph& g, const OracleOptions& options = {});

struct TToughResult {
  bool tough = true;
  std::optional<CutWitness> violation;
  std::size_t subsets_examined = 0;
};

/// Decides t*c(G-S) <= |S| (or t*(c-1) <= |S|) for every vertex cut,
/// stopping at the first violation. Only sizes that could violate are scanned.
TToughResult is_t_tough(const Graph& g, const Rational& t, ToughnessVariant variant,
                        const OracleOptions& options = {});

}  // namespace qdtough
