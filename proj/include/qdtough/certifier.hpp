#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdtough/graph.hpp"
#include "qdtough/rational.hpp"
#include "qdtough/spectral.hpp"
#include "qdtough/toughness.hpp"

namespace qdtough {

enum class Verdict { Certified, ExtremalException, Inconclusive, PreconditionFailed };

/// Which sufficient condition is applied.
///  - OneTough: eta_1(G) <= eta_1(K_d v (K_{n-2d} + d K_1)) with d = delta(G).
///  - Fractional: eta_1(G) <= eta_1(K_1 v (K_{n-q-1} + q K_1)), t = 1/q.
///  - OrderA: eta_1(G) < (2n^2 + 2n - 4t)/n, integer t >= 2.
///  - OrderB: eta_1(G) < 2n + 4d/t + 2 - 2(d+t)(2dt+d+2t)/(n t^2), t = 1/q.
enum class Theorem { OneTough, Fractional, OrderA, OrderB };

const char* to_string(Verdict verdict) noexcept;
const char* to_string(Theorem theorem) noexcept;
/// Accepts "1.1", "1.2", "1.3a", "1.3b".
Theorem parse_theorem(const std::string& text);
const char* theorem_label(Theorem theorem) noexcept;

struct CertOptions {
  /// Relative half-width of the no-decision band around the threshold.
  double band = 1e-7;
  PerronOptions perron;
};

struct EdgeBound {
  /// m must exceed this value.
  Rational bound;
  bool satisfied = false;
};

struct CertOutcome {
  Verdict verdict = Verdict::Inconclusive;
  Theorem theorem = Theorem::OneTough;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t min_degree = 0;
  /// Toughness the theorem would guarantee.
  Rational t = Rational(1);
  double eta1_graph = 0.0;
  double threshold = 0.0;
  /// threshold - eta1_graph
  double margin = 0.0;
  /// Absolute half-width of the band actually used.
  double band = 0.0;
  std::vector<std::string> precondition_log;
  std::vector<std::string> diagnostics;
  /// Implied size condition for the order-based conditions.
  std::optional<EdgeBound> edge_bound;
  std::optional<bool> oracle_crosscheck;
};

/// Throws Disconnected. delta is taken from the graph.
CertOutcome certify_1tough(const Graph& g, const CertOptions& options = {});
/// Throws InvalidArgument for q < 1, Disconnected.
CertOutcome certify_ttough_fractional(const Graph& g, std::int64_t q, const CertOptions& options = {});
/// t is an integer; t < 2 or n < 2t^2 + 2t is a failed precondition.
CertOutcome certify_order_a(const Graph& g, std::int64_t t, const CertOptions& options = {});
/// t = 1/q; delta is taken from the graph.
CertOutcome certify_order_b(const Graph& g, std::int64_t q, const CertOptions& options = {});

/// Dispatch on theorem; `param` is q for Fractional/OrderB and t for OrderA.
CertOutcome certify(const Graph& g, Theorem theorem, std::int64_t param, const CertOptions& options = {});

/// Toughness level the theorem guarantees for the given parameter.
Rational guaranteed_toughness(Theorem theorem, std::int64_t param);

/// Smallest integer order satisfying the theorem's order bound, given delta
/// where relevant. Returns nullopt if the parameters are themselves invalid.
std::optional<std::size_t> minimum_order(Theorem theorem, std::int64_t param, std::size_t delta);

// --- Falsification sweep ----------------------------------------------------

struct SweepConfig {
  Theorem theorem = Theorem::OneTough;
  /// q for Fractional/OrderB, t for OrderA; ignored for OneTough.
  std::int64_t param = 1;
  std::size_t n_min = 22;
  std::size_t n_max = 22;
  /// Minimum degree targeted by the planted generators (OneTough, OrderB).
  std::size_t delta = 2;
  std::uint64_t seed = 20240531;
  std::size_t count = 500;
  std::size_t oracle_cap = 24;
  std::size_t workers = 1;
  CertOptions cert;
};

struct SweepInstance {
  std::size_t index = 0;
  std::string generator;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string graph6;
  Verdict verdict = Verdict::Inconclusive;
  double eta1 = 0.0;
  double threshold = 0.0;
  bool extremal = false;
  /// Filled for Certified instances within the oracle cap.
  std::optional<bool> tau_prime_tough;
  std::optional<bool> tau_tough;
  std::optional<bool> edge_bound_satisfied;
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepInstance> instances;
  std::size_t certified = 0;
  std::size_t extremal_exceptions = 0;
  std::size_t inconclusive = 0;
  std::size_t precondition_failed = 0;
  std::size_t oracle_checked = 0;
  /// Certified but some cut violates t(c-1) <= |S|.
  std::size_t tau_prime_violations = 0;
  /// Certified but some cut violates t c <= |S|; logged, not a failure.
  std::size_t tau_violations = 0;
  /// An exceptional graph reported as Certified.
  std::size_t extremal_certified = 0;

  bool sound() const { return tau_prime_violations == 0 && extremal_certified == 0; }
};

/// Runs `count` seeded instances; instance i draws from a generator seeded by
/// (seed, i), so results do not depend on the worker count.
SweepReport falsify_sweep(const SweepConfig& config);

/// Instance generator used by the sweep, exposed for tests.
Graph sweep_instance(const SweepConfig& config, std::size_t index, std::string* generator_name = nullptr);

}  // namespace qdtough
