#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "qdtough/certifier.hpp"
#include "qdtough/toughness.hpp"

namespace qdtough {

inline constexpr std::uint64_t kDefaultSeed = 20240531;

/// Settings shared by every subcommand. All values come from flags.
struct RunConfig {
  double residual_tol = 1e-9;
  double strict_margin = 1e-9;
  double verdict_band = 1e-7;
  std::size_t oracle_cap = 24;
  std::uint64_t seed = kDefaultSeed;
  std::size_t count = 500;
  std::size_t workers = 1;
  std::string format = "json";

  /// Throws InvalidArgument unless tolerances are positive and cap >= 4.
  void validate() const;

  PerronOptions perron() const;
  CertOptions cert() const;
  OracleOptions oracle() const;
};

}  // namespace qdtough
