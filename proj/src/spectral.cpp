#include "qdtough/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qdtough/error.hpp"

namespace qdtough {

std::vector<std::int64_t> transmissions(const Graph& g) {
  require_connected(g, "transmission");
  const DistanceTable d = all_pairs_distances(g);
  std::vector<std::int64_t> tr(g.order(), 0);
  for (std::size_t v = 0; v < g.order(); ++v) {
    for (std::uint32_t dist : d.row(v)) tr[v] += dist;
  }
  return tr;
}

std::int64_t wiener_index(const Graph& g) {
  require_connected(g, "Wiener index");
  const DistanceTable d = all_pairs_distances(g);
  std::int64_t w = 0;
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j) w += d(i, j);
  return w;
}

DenseMatrix distance_matrix(const Graph& g) {
  require_connected(g, "distance matrix");
  const DistanceTable d = all_pairs_distances(g);
  const std::size_t n = g.order();
  DenseMatrix m(n, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(i, j);
  return m;
}

DenseMatrix dsl_matrix(const Graph& g) {
  DenseMatrix m = distance_matrix(g);
  for (std::size_t i = 0; i < m.order(); ++i) m(i, i) = m.row_sum(i);
  return m;
}

// --- eigenvalues ------------------------------------------------------------

std::array<double, 3> charpoly_3x3(const DenseMatrix& m) {
  if (m.order() != 3) throw Error(ErrorKind::InvalidArgument, "charpoly_3x3 needs a 3x3 matrix");
  const double minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                        m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  const double det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                     m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                     m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  return {-m.trace(), minors, -det};
}

double largest_real_root_cubic(double c2, double c1, double c0) {
  // Depressed cubic y^3 + p y + q with x = y - c2/3.
  const double shift = c2 / 3.0;
  const double p = c1 - c2 * c2 / 3.0;
  const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;
  const double disc = q * q / 4.0 + p * p * p / 27.0;
  double y = 0.0;
  if (disc <= 0.0 && p < 0.0) {
    const double r = std::sqrt(-p / 3.0);
    const double arg = std::clamp(-q / (2.0 * r * r * r), -1.0, 1.0);
    y = 2.0 * r * std::cos(std::acos(arg) / 3.0);
  } else {
    const double sq = std::sqrt(std::max(disc, 0.0));
    y = std::cbrt(-q / 2.0 + sq) + std::cbrt(-q / 2.0 - sq);
  }
  double x = y - shift;
  // Newton polish; the largest root is simple for the matrices used here.
  for (int it = 0; it < 8; ++it) {
    const double f = ((x + c2) * x + c1) * x + c0;
    const double df = (3.0 * x + 2.0 * c2) * x + c1;
    if (df == 0.0) break;
    const double step = f / df;
    x -= step;
    if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

namespace {

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double relative_residual(const DenseMatrix& m, std::span<const double> x, double lambda) {
  const std::vector<double> y = m * x;
  double worst = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) worst = std::max(worst, std::abs(y[i] - lambda * x[i]));
  return lambda > 0.0 ? worst / lambda : worst;
}

// Eigenvector of a 3x3 matrix for a known eigenvalue: the largest cross
// product of two rows of (M - lambda I) spans the null space.
std::vector<double> null_vector_3x3(const DenseMatrix& m, double lambda) {
  double r[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m(i, j) - (i == j ? lambda : 0.0);
  std::vector<double> best(3, 0.0);
  double best_norm = -1.0;
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3;
    std::vector<double> c{r[a][1] * r[b][2] - r[a][2] * r[b][1], r[a][2] * r[b][0] - r[a][0] * r[b][2],
                          r[a][0] * r[b][1] - r[a][1] * r[b][0]};
    const double nc = norm2(c);
    if (nc > best_norm) {
      best_norm = nc;
      best = c;
    }
  }
  if (best[0] + best[1] + best[2] < 0.0)
    for (double& v : best) v = -v;
  for (double& v : best) v /= best_norm;
  return best;
}

}  // namespace

PerronResult perron_value(const DenseMatrix& m, const PerronOptions& options) {
  const std::size_t n = m.order();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "Perron value of an empty matrix");
  if (!m.nonnegative()) throw Error(ErrorKind::InvalidArgument, "Perron iteration needs a nonnegative matrix");

  PerronResult result;
  if (n == 1) {
    result.value = m(0, 0);
    result.vector = {1.0};
    return result;
  }
  if (n == 3) {
    const auto c = charpoly_3x3(m);
    result.cubic_check = largest_real_root_cubic(c[0], c[1], c[2]);
  }

  // Iterate past the required residual to leave headroom for downstream
  // comparisons; stagnation at the rounding floor also ends the loop.
  const double target = options.residual_tol * 1e-2;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double lambda = 0.0;
  double previous = -1.0;
  double residual = 1.0;
  std::size_t stalls = 0;
  std::size_t it = 0;
  for (; it < options.max_iterations; ++it) {
    m.multiply(x, y);
    lambda = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(y[i] - lambda * x[i]));
    residual = lambda > 0.0 ? worst / lambda : worst;
    const double change = std::abs(lambda - previous);
    const bool rayleigh_ok = change <= options.rayleigh_tol * std::abs(lambda);
    stalls = (change == 0.0) ? stalls + 1 : 0;
    if (rayleigh_ok && (residual <= target || (stalls >= 3 && residual <= options.residual_tol))) break;
    previous = lambda;
    const double ny = norm2(y);
    if (ny == 0.0) break;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny;
  }
  result.iterations = it;

  if (residual > options.residual_tol || !(lambda > 0.0)) {
    if (result.cubic_check) {
      result.value = *result.cubic_check;
      result.vector = null_vector_3x3(m, result.value);
      result.relative_residual = relative_residual(m, result.vector, result.value);
      if (result.relative_residual <= options.residual_tol) return result;
    }
    std::ostringstream os;
    os << "power iteration did not converge after " << it << " iterations (relative residual " << residual
       << ")";
    throw NumericFailure(os.str(), residual);
  }

  result.value = lambda;
  result.vector = std::move(x);
  result.relative_residual = residual;
  return result;
}

double eta1(const Graph& g, const PerronOptions& options) { return perron_value(dsl_matrix(g), options).value; }

// --- quotients --------------------------------------------------------------

Partition::Partition(std::size_t order, std::vector<std::vector<Vertex>> blocks)
    : order_(order), blocks_(std::move(blocks)) {
  std::vector<bool> seen(order, false);
  std::size_t covered = 0;
  for (const auto& block : blocks_) {
    if (block.empty()) throw Error(ErrorKind::InvalidArgument, "partition block is empty");
    for (Vertex v : block) {
      if (v >= order || seen[v]) throw Error(ErrorKind::InvalidArgument, "partition blocks must be disjoint and in range");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != order) throw Error(ErrorKind::InvalidArgument, "partition does not cover every index");
}

QuotientMatrix quotient(const DenseMatrix& m, const Partition& partition) {
  if (partition.order() != m.order()) throw Error(ErrorKind::InvalidArgument, "partition order mismatch");
  const std::size_t k = partition.block_count();
  QuotientMatrix q{DenseMatrix(k), true};
  for (std::size_t bi = 0; bi < k; ++bi) {
    const auto& rows = partition.block(bi);
    for (std::size_t bj = 0; bj < k; ++bj) {
      const auto& cols = partition.block(bj);
      double total = 0.0;
      double first = 0.0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        double sum = 0.0;
        for (Vertex c : cols) sum += m(rows[r], c);
        if (r == 0) first = sum;
        else if (sum != first) q.equitable = false;
        total += sum;
      }
      q.entries(bi, bj) = total / static_cast<double>(rows.size());
    }
  }
  return q;
}

// --- bounds and summary -----------------------------------------------------

Eta1LowerBounds eta1_lower_bounds(const Graph& g) {
  const double n = static_cast<double>(g.order());
  const double w = static_cast<double>(wiener_index(g));
  return {4.0 * w / n, 4.0 * (n - 1.0) - 4.0 * static_cast<double>(g.size()) / n};
}

SpectralSummary summarize(const Graph& g, const PerronOptions& options) {
  SpectralSummary s;
  s.order = g.order();
  s.size = g.size();
  s.transmissions = transmissions(g);
  s.wiener = std::accumulate(s.transmissions.begin(), s.transmissions.end(), std::int64_t{0}) / 2;
  const bool regular = std::adjacent_find(s.transmissions.begin(), s.transmissions.end(),
                                          std::not_equal_to<>()) == s.transmissions.end();
  s.transmission_regular = regular;
  if (regular) s.regular_k = s.transmissions.front();
  const PerronResult pr = perron_value(dsl_matrix(g), options);
  s.eta1 = pr.value;
  s.perron = pr.vector;
  s.iterations = pr.iterations;
  s.relative_residual = pr.relative_residual;
  const double n = static_cast<double>(s.order);
  s.bounds = {4.0 * static_cast<double>(s.wiener) / n, 4.0 * (n - 1.0) - 4.0 * static_cast<double>(s.size) / n};
  return s;
}

}  // namespace qdtough
