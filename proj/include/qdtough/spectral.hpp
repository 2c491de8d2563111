#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qdtough/graph.hpp"
#include "qdtough/matrix.hpp"

namespace qdtough {

// --- Graph invariants -------------------------------------------------------

/// Tr(v) = sum of distances from v. Throws Disconnected.
std::vector<std::int64_t> transmissions(const Graph& g);

/// W(G) = sum over unordered pairs of their distance. Throws Disconnected.
std::int64_t wiener_index(const Graph& g);

/// Q_D(G) = D(G) + Tr(G). Throws Disconnected.
DenseMatrix dsl_matrix(const Graph& g);

/// D(G) as a dense matrix. Throws Disconnected.
DenseMatrix distance_matrix(const Graph& g);

// --- Eigenvalues ------------------------------------------------------------

struct PerronOptions {
  /// Stop once the relative change of the Rayleigh quotient drops below this.
  double rayleigh_tol = 1e-12;
  /// Required bound on ||Mx - lambda x||_inf / lambda.
  double residual_tol = 1e-9;
  std::size_t max_iterations = 100000;
};

struct PerronResult {
  double value = 0.0;
  /// Unit 2-norm, positive entries.
  std::vector<double> vector;
  std::size_t iterations = 0;
  /// ||Mx - value x||_inf / value at exit.
  double relative_residual = 0.0;
  /// Largest root of the characteristic cubic, filled for 3x3 inputs.
  std::optional<double> cubic_check;
};

/// Perron root and vector of a nonnegative irreducible matrix by power
/// iteration from the all-ones vector. 3x3 inputs are cross-checked against
/// the closed-form cubic root, which also serves as fallback when the
/// iteration stalls. Throws NumericFailure carrying the last residual.
PerronResult perron_value(const DenseMatrix& m, const PerronOptions& options = {});

/// Largest real root of x^3 + c2 x^2 + c1 x + c0.
double largest_real_root_cubic(double c2, double c1, double c0);

/// Characteristic polynomial det(xI - M) of a 3x3 matrix as {c2, c1, c0}
/// for x^3 + c2 x^2 + c1 x + c0.
std::array<double, 3> charpoly_3x3(const DenseMatrix& m);

/// eta_1(G): Perron root of Q_D(G).
double eta1(const Graph& g, const PerronOptions& options = {});

// --- Quotients --------------------------------------------------------------

/// Disjoint nonempty blocks covering 0..n-1.
class Partition {
 public:
  /// Throws InvalidArgument unless the blocks partition 0..order-1.
  Partition(std::size_t order, std::vector<std::vector<Vertex>> blocks);

  std::size_t order() const { return order_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  const std::vector<Vertex>& block(std::size_t i) const { return blocks_[i]; }

 private:
  std::size_t order_;
  std::vector<std::vector<Vertex>> blocks_;
};

struct QuotientMatrix {
  DenseMatrix entries;
  bool equitable = false;

  std::size_t order() const { return entries.order(); }
};

/// Average block row sums. Equitability compares the row sums of each block
/// exactly, so the flag is exact for integer-valued sources.
QuotientMatrix quotient(const DenseMatrix& m, const Partition& partition);

// --- Bounds and summary -----------------------------------------------------

struct Eta1LowerBounds {
  double wiener_bound = 0.0;  ///< 4W/n
  double size_bound = 0.0;    ///< 4(n-1) - 4m/n
};

Eta1LowerBounds eta1_lower_bounds(const Graph& g);

struct SpectralSummary {
  std::size_t order = 0;
  std::size_t size = 0;
  double eta1 = 0.0;
  std::vector<double> perron;
  std::vector<std::int64_t> transmissions;
  std::int64_t wiener = 0;
  bool transmission_regular = false;
  std::optional<std::int64_t> regular_k;
  Eta1LowerBounds bounds;
  std::size_t iterations = 0;
  double relative_residual = 0.0;
};

SpectralSummary summarize(const Graph& g, const PerronOptions& options = {});

}  // namespace qdtough
