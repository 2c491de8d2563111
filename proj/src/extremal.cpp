#include "qdtough/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qdtough/error.hpp"

namespace qdtough {

const char* to_string(QuotientKind kind) noexcept {
  switch (kind) {
    case QuotientKind::Bstar: return "Bstar";
    case QuotientKind::Btilde: return "Btilde";
    case QuotientKind::B2: return "B2";
  }
  return "unknown";
}

void CharPolyParams::validate() const {
  auto fail = [&](const char* why) { throw Error(ErrorKind::InvalidArgument, to_string() + ": " + why); };
  switch (kind) {
    case QuotientKind::Bstar:
      if (delta < 1) fail("delta must be positive");
      if (n <= 2 * delta) fail("needs n > 2 delta");
      break;
    case QuotientKind::Btilde:
      if (s < 1 || q < 1) fail("s and q must be positive");
      if (n < s + s * q + 1) fail("needs n >= s + sq + 1");
      break;
    case QuotientKind::B2:
      if (s < 1 || s > delta) fail("needs 1 <= s <= delta");
      if (n < s + s * (delta - s + 1) + 1) fail("needs n >= s + s(delta - s + 1) + 1");
      break;
  }
}

std::string CharPolyParams::to_string() const {
  std::ostringstream os;
  os << qdtough::to_string(kind) << "(n=" << n;
  if (kind != QuotientKind::Btilde) os << ", delta=" << delta;
  if (kind != QuotientKind::Bstar) os << ", s=" << s;
  if (kind == QuotientKind::Btilde) os << ", q=" << q;
  os << ")";
  return os.str();
}

ExtremalSpec underlying_family(const CharPolyParams& params) {
  params.validate();
  const std::size_t n = params.n;
  switch (params.kind) {
    case QuotientKind::Bstar:
      return ExtremalSpec::min_degree_family(n, params.delta);
    case QuotientKind::Btilde: {
      const std::size_t singles = params.s * params.q;
      std::vector<std::size_t> parts{n - params.s - singles};
      parts.insert(parts.end(), singles, 1);
      return ExtremalSpec(params.s, std::move(parts));
    }
    case QuotientKind::B2: {
      const std::size_t p = params.delta - params.s + 1;
      std::vector<std::size_t> parts{n - params.s - params.s * p};
      parts.insert(parts.end(), params.s, p);
      return ExtremalSpec(params.s, std::move(parts), p);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown quotient kind");
}

Partition canonical_partition(const CharPolyParams& params) {
  const ExtremalSpec spec = underlying_family(params);
  const auto blocks = family_blocks(spec);
  const std::size_t big_size = [&] {
    switch (params.kind) {
      case QuotientKind::Bstar: return params.n - 2 * params.delta;
      case QuotientKind::Btilde: return params.n - params.s - params.s * params.q;
      case QuotientKind::B2: return params.n - params.s - params.s * (params.delta - params.s + 1);
    }
    return std::size_t{0};
  }();
  // blocks[0] is the hub; the first part of the big size is the big clique.
  std::size_t big = 1;
  while (blocks[big].size() != big_size) ++big;
  std::vector<Vertex> small;
  for (std::size_t b = 1; b < blocks.size(); ++b) {
    if (b != big) small.insert(small.end(), blocks[b].begin(), blocks[b].end());
  }
  std::vector<std::vector<Vertex>> ordered;
  if (params.kind == QuotientKind::Btilde) ordered = {blocks[0], blocks[big], small};
  else ordered = {small, blocks[big], blocks[0]};
  return Partition(spec.order(), std::move(ordered));
}

QuotientMatrix quotient_closed_form(const CharPolyParams& params) {
  params.validate();
  const double n = static_cast<double>(params.n);
  const double d = static_cast<double>(params.delta);
  const double s = static_cast<double>(params.s);
  const double q = static_cast<double>(params.q);
  switch (params.kind) {
    case QuotientKind::Bstar:
      return {DenseMatrix{{2 * n + d - 4, 2 * n - 4 * d, d},
                          {2 * d, 2 * n - d - 2, d},
                          {d, n - 2 * d, n + d - 2}},
              true};
    case QuotientKind::Btilde:
      return {DenseMatrix{{n + s - 2, n - s - s * q, s * q},
                          {s, 2 * n - s - 2, 2 * s * q},
                          {s, 2 * n - 2 * s - 2 * s * q, 2 * n - s + 2 * s * q - 4}},
              true};
    case QuotientKind::B2: {
      const double p = d - s + 1;
      return {DenseMatrix{{2 * n - s + 2 * (s - 1) * p - 2, 2 * (n - s - s * p), s},
                          {2 * s * p, 2 * n - s - 2, s},
                          {s * p, n - s - s * p, n + s - 2}},
              true};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown quotient kind");
}

std::array<double, 3> published_charpoly(const CharPolyParams& params) {
  params.validate();
  const double n = static_cast<double>(params.n);
  const double d = static_cast<double>(params.delta);
  const double s = static_cast<double>(params.s);
  switch (params.kind) {
    case QuotientKind::Bstar:
      return {-(5 * n + d - 8),
              8 * n * n - (d + 26) * n + 8 * d * d - 4 * d + 20,
              -4 * n * n * n + (2 * d + 20) * n * n - (2 * d * d + 2 * d + 32) * n - 2 * d * d * d + 18 * d * d -
                  4 * d + 16};
    case QuotientKind::Btilde: {
      // Printed in terms of 1/t; here 1/t = q.
      const double u = static_cast<double>(params.q);
      return {-(5 * n + 2 * u * s - s - 8),
              (4 * u * u + 4 * u) * s * s + (2 * n * u - 3 * n - 8 * u + 4) * s + 8 * n * n - 26 * n + 20,
              -4 * n * n * n + 2 * (s + 10) * n * n - (4 * u * u * s * s + 4 * u * s * s - 4 * u * s + 6 * s + 32) * n -
                  2 * u * u * s * s * s + 8 * u * u * s * s + 10 * u * s * s - 8 * u * s + 4 * s + 16};
    }
    case QuotientKind::B2: {
      const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;
      return {2 * s2 - (2 * d + 3) * s - 5 * n + 2 * d + 8,
              4 * s2 - (8 * d + 12) * s3 + (-2 * n + 4 * d * d + 12 * d + 16) * s2 +
                  (2 * d * n + 5 * n - 8 * d - 12) * s + 8 * n * n - (6 * d + 26) * n + 8 * d + 20,
              -2 * s5 - (4 * n - 4 * d - 14) * s4 + (8 * d * n + 12 * n - 2 * d * d - 24 * d - 30) * s3 -
                  (4 * d * d * n + 12 * d * n + 12 * n - 10 * d * d - 28 * d - 26) * s2 -
                  (2 * n * n - 4 * d * n - 10 * n + 8 * d + 12) * s - 4 * n * n * n + 4 * d * n * n + 20 * n * n -
                  12 * d * n - 32 * n + 8 * d + 16};
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown quotient kind");
}

std::array<double, 3> determinant_charpoly(const CharPolyParams& params) {
  return charpoly_3x3(quotient_closed_form(params).entries);
}

double CharPolyValue::relative_error() const {
  const double denom = scale > 0.0 ? scale : 1.0;
  return std::abs(paper_value - det_value) / denom;
}

CharPolyValue charpoly_eval(const CharPolyParams& params, double x) {
  const DenseMatrix b = quotient_closed_form(params).entries;
  double a[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = (i == j ? x : 0.0) - b(i, j);
  CharPolyValue out;
  out.det_value = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                  a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                  a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  const auto pub = published_charpoly(params);
  out.paper_value = ((x + pub[0]) * x + pub[1]) * x + pub[2];
  const auto exact = charpoly_3x3(b);
  const double ax = std::abs(x);
  out.scale = ax * ax * ax + std::abs(exact[0]) * ax * ax + std::abs(exact[1]) * ax + std::abs(exact[2]);
  return out;
}

std::vector<CoefficientDiscrepancy> charpoly_discrepancies(const CharPolyParams& params) {
  const auto pub = published_charpoly(params);
  const auto det = determinant_charpoly(params);
  std::vector<CoefficientDiscrepancy> out;
  for (int k = 0; k < 3; ++k) {
    if (pub[k] != det[k]) out.push_back({params, 2 - k, pub[k], det[k]});
  }
  return out;
}

double charpoly_largest_root(const CharPolyParams& params) {
  const auto c = determinant_charpoly(params);
  return largest_real_root_cubic(c[0], c[1], c[2]);
}

// --- family comparisons -----------------------------------------------------

std::vector<WienerCheck> min_degree_family_wiener(std::size_t n, std::size_t delta) {
  const ExtremalSpec spec = ExtremalSpec::min_degree_family(n, delta);
  const std::int64_t bfs = wiener_index(build_family(spec));
  const auto N = static_cast<std::int64_t>(n);
  const auto d = static_cast<std::int64_t>(delta);
  const Rational half(1, 2);
  // singles among themselves, singles to the big clique, singles to the hub,
  // then every pair inside K_{n-d}
  const Rational classes = Rational(d * (d - 1)) + Rational(2 * (N - 2 * d) * d) + Rational(d * d) +
                           Rational((N - d) * (N - d - 1), 2);
  const Rational simplified = half * Rational(N * N) + (Rational(d) - half) * Rational(N) -
                              Rational(3, 2) * Rational(d * d) - half * Rational(d);
  const Rational printed = half * Rational(N * N) + (Rational(d) - half) - Rational(3, 2) * Rational(d * d) -
                           half * Rational(d);
  return {{"distance-class sum", classes, bfs},
          {"n^2/2 + (d - 1/2) n - 3d^2/2 - d/2", simplified, bfs},
          {"n^2/2 + (d - 1/2) - 3d^2/2 - d/2 (as printed)", printed, bfs}};
}

QuotientMatrix family_quotient(const ExtremalSpec& spec) {
  const std::size_t s = spec.hub();
  const auto& parts = spec.parts();
  if (s == 0 && parts.size() > 1) {
    throw Error(ErrorKind::Disconnected, "family without a hub clique is disconnected");
  }
  const double n = static_cast<double>(spec.order());
  const double hub = static_cast<double>(s);
  const std::size_t offset = s > 0 ? 1 : 0;
  const std::size_t order = parts.size() + offset;
  QuotientMatrix q{DenseMatrix(order), true};
  if (s > 0) {
    q.entries(0, 0) = (hub - 1) + (n - 1);
    for (std::size_t j = 0; j < parts.size(); ++j) q.entries(0, j + offset) = static_cast<double>(parts[j]);
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const double ni = static_cast<double>(parts[i]);
    const double tr = 2 * n - hub - ni - 1;
    if (s > 0) q.entries(i + offset, 0) = hub;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      q.entries(i + offset, j + offset) = i == j ? (ni - 1) + tr : 2 * static_cast<double>(parts[j]);
    }
  }
  return q;
}

double family_eta1(const ExtremalSpec& spec, const PerronOptions& options) {
  return perron_value(family_quotient(spec).entries, options).value;
}

ComparisonRecord compare_families(std::size_t s, std::vector<std::size_t> parts, std::size_t p, double margin,
                                  const PerronOptions& options) {
  if (p == 0) throw Error(ErrorKind::InvalidSpec, "p must be positive");
  ExtremalSpec given(s, std::move(parts), p);
  const auto& sorted = given.parts();
  const std::size_t n = given.order();
  const std::size_t c = sorted.size();
  if (c == 0) throw Error(ErrorKind::InvalidSpec, "comparison needs at least one part");
  if (n < s + (c - 1) * p + 1) {
    throw Error(ErrorKind::InvalidSpec, "K_{n-s-(c-1)p} would be empty for " + given.to_string());
  }
  std::vector<std::size_t> target{n - s - (c - 1) * p};
  target.insert(target.end(), c - 1, p);
  ExtremalSpec extremal(s, std::move(target), p);

  ComparisonRecord rec{given, extremal, 0.0, 0.0, 0.0, false, false, false, {}};
  if (s < 1) rec.premise_notes.push_back("s must be a positive integer");
  if (sorted.back() < p) rec.premise_notes.push_back("smallest part n_c is below p");
  if (p >= 2 && c >= 2 && sorted[0] < sorted[1] + 2 * p) rec.premise_notes.push_back("n_1 - n_2 is below 2p");
  rec.premises_hold = rec.premise_notes.empty();
  rec.identical = given.parts() == extremal.parts();
  rec.eta1_given = family_eta1(given, options);
  rec.eta1_extremal = family_eta1(extremal, options);
  rec.difference = rec.eta1_given - rec.eta1_extremal;
  rec.strict = rec.difference > margin;
  return rec;
}

}  // namespace qdtough
