#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qdtough/family.hpp"
#include "qdtough/rational.hpp"
#include "qdtough/spectral.hpp"

namespace qdtough {

/// The three 3x3 quotient matrices with closed-form entries.
///
///  - Bstar: K_d v (K_{n-2d} + d K_1) under {d K_1, K_{n-2d}, K_d}.
///  - Btilde: K_s v (K_{n-s-sq} + sq K_1) under {K_s, K_{n-s-sq}, sq K_1};
///    s = 1 gives the matrix of K_1 v (K_{n-q-1} + q K_1).
///  - B2: K_s v (K_{n-s-s(d-s+1)} + s K_{d-s+1}) under
///    {s K_{d-s+1}, K_{n-s-s(d-s+1)}, K_s}.
enum class QuotientKind { Bstar, Btilde, B2 };

const char* to_string(QuotientKind kind) noexcept;

struct CharPolyParams {
  QuotientKind kind = QuotientKind::Bstar;
  std::size_t n = 0;
  std::size_t delta = 0;  ///< Bstar, B2
  std::size_t s = 0;      ///< Btilde, B2
  std::size_t q = 0;      ///< Btilde (t = 1/q)

  static CharPolyParams bstar(std::size_t n, std::size_t delta) {
    return {QuotientKind::Bstar, n, delta, 0, 0};
  }
  static CharPolyParams btilde(std::size_t n, std::size_t s, std::size_t q) {
    return {QuotientKind::Btilde, n, 0, s, q};
  }
  static CharPolyParams b2(std::size_t n, std::size_t delta, std::size_t s) {
    return {QuotientKind::B2, n, delta, s, 0};
  }

  /// Throws InvalidArgument when a block of the underlying graph would be empty.
  void validate() const;
  std::string to_string() const;
};

/// Family whose Q_D quotient is the given closed-form matrix.
ExtremalSpec underlying_family(const CharPolyParams& params);
/// Partition of build_family(underlying_family(params)) in the block order
/// of quotient_closed_form.
Partition canonical_partition(const CharPolyParams& params);

QuotientMatrix quotient_closed_form(const CharPolyParams& params);

/// Coefficients {c2, c1, c0} of x^3 + c2 x^2 + c1 x + c0 as transcribed from
/// the published expansions, unchanged (including misprints).
std::array<double, 3> published_charpoly(const CharPolyParams& params);

/// Exact coefficients of det(xI - B) from the closed-form matrix.
std::array<double, 3> determinant_charpoly(const CharPolyParams& params);

struct CharPolyValue {
  double paper_value = 0.0;
  double det_value = 0.0;
  /// Sum of absolute monomial contributions of the determinant polynomial at x;
  /// the denominator of relative_error.
  double scale = 0.0;
  double relative_error() const;
};

CharPolyValue charpoly_eval(const CharPolyParams& params, double x);

/// One coefficient where the published cubic differs from the determinant.
struct CoefficientDiscrepancy {
  CharPolyParams params;
  int power = 0;  ///< 2, 1 or 0
  double published = 0.0;
  double determinant = 0.0;
};

std::vector<CoefficientDiscrepancy> charpoly_discrepancies(const CharPolyParams& params);

/// Largest root of the determinant cubic (the authoritative polynomial).
double charpoly_largest_root(const CharPolyParams& params);

// --- Wiener index of K_d v (K_{n-2d} + d K_1) -----------------------------

/// One closed-form expression for W checked against BFS summation.
struct WienerCheck {
  std::string form;
  Rational value;
  std::int64_t bfs = 0;
  bool matches() const { return value == Rational(bfs); }
};

/// Evaluates the distance-class sum, the simplified closed form
/// n^2/2 + (d - 1/2) n - 3d^2/2 - d/2, and the printed variant that omits the
/// factor n, each against wiener_index of the assembled graph.
std::vector<WienerCheck> min_degree_family_wiener(std::size_t n, std::size_t delta);

// --- Family comparisons -----------------------------------------------------

/// (c+1)x(c+1) quotient of Q_D(build_family(spec)) under hub + parts.
QuotientMatrix family_quotient(const ExtremalSpec& spec);
/// eta_1 of the family via its equitable quotient.
double family_eta1(const ExtremalSpec& spec, const PerronOptions& options = {});

struct ComparisonRecord {
  ExtremalSpec given;
  ExtremalSpec extremal;
  double eta1_given = 0.0;
  double eta1_extremal = 0.0;
  double difference = 0.0;  ///< eta1_given - eta1_extremal
  bool identical = false;   ///< given composition equals the extremal one
  bool strict = false;      ///< difference > margin
  bool premises_hold = false;
  /// Premise violations; non-empty means the record is informational only.
  std::vector<std::string> premise_notes;
};

/// Compares K_s v (K_{n_1}+...+K_{n_c}) with K_s v (K_{n-s-(c-1)p} + (c-1)K_p).
/// Premise violations are reported in the record, never thrown.
ComparisonRecord compare_families(std::size_t s, std::vector<std::size_t> parts, std::size_t p,
                                  double margin = 1e-9, const PerronOptions& options = {});

}  // namespace qdtough
