#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdtough/random.hpp"

namespace qdtough {

/// Names accepted by verify_lemma: "2.1", "2.2", "2.3", "2.4", "2.5", "3.1".
std::vector<std::string> lemma_names();

struct LemmaCheck {
  std::string lemma;
  std::string property;
  bool passed = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Worst observed quantity for the property (gap, error or margin).
  double worst = 0.0;
  std::vector<std::string> failure_details;
};

struct LemmaSuiteOptions {
  std::uint64_t seed = 20240531;
  /// Random instances per randomized property.
  std::size_t cases = 200;
};

/// (s, parts, p) satisfying n_1 - n_2 >= 2p and n_1 >= ... >= n_c >= p >= 1.
struct FamilyTuple {
  std::size_t s = 1;
  std::vector<std::size_t> parts;
  std::size_t p = 1;
};

FamilyTuple random_valid_family_tuple(Rng& rng, std::size_t max_p = 3);

/// Numerical property checks for one supporting lemma.
/// Throws InvalidArgument for unknown names.
std::vector<LemmaCheck> verify_lemma(const std::string& lemma, const LemmaSuiteOptions& options = {});

}  // namespace qdtough
