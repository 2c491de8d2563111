#include "qdtough/certifier.hpp"

#include <cmath>
#include <sstream>

#include "qdtough/error.hpp"
#include "qdtough/extremal.hpp"
#include "qdtough/family.hpp"

namespace qdtough {

const char* to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::Certified: return "Certified";
    case Verdict::ExtremalException: return "ExtremalException";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::PreconditionFailed: return "PreconditionFailed";
  }
  return "unknown";
}

const char* to_string(Theorem theorem) noexcept {
  switch (theorem) {
    case Theorem::OneTough: return "one-tough";
    case Theorem::Fractional: return "fractional";
    case Theorem::OrderA: return "order-a";
    case Theorem::OrderB: return "order-b";
  }
  return "unknown";
}

const char* theorem_label(Theorem theorem) noexcept {
  switch (theorem) {
    case Theorem::OneTough: return "1.1";
    case Theorem::Fractional: return "1.2";
    case Theorem::OrderA: return "1.3a";
    case Theorem::OrderB: return "1.3b";
  }
  return "?";
}

Theorem parse_theorem(const std::string& text) {
  if (text == "1.1") return Theorem::OneTough;
  if (text == "1.2") return Theorem::Fractional;
  if (text == "1.3a") return Theorem::OrderA;
  if (text == "1.3b") return Theorem::OrderB;
  throw Error(ErrorKind::Parse, "unknown theorem '" + text + "' (expected 1.1, 1.2, 1.3a or 1.3b)");
}

Rational guaranteed_toughness(Theorem theorem, std::int64_t param) {
  switch (theorem) {
    case Theorem::OneTough: return Rational(1);
    case Theorem::OrderA: return Rational(param);
    case Theorem::Fractional:
    case Theorem::OrderB:
      if (param < 1) throw Error(ErrorKind::InvalidArgument, "q must be a positive integer");
      return Rational(1, param);
  }
  return Rational(1);
}

namespace {

std::int64_t ceil_of(const Rational& r) {
  std::int64_t q = r.num() / r.den();
  if (q * r.den() < r.num()) ++q;
  return q;
}

Rational order_b_bound(std::int64_t q, std::int64_t delta) {
  // ((2t^2 + 3t + 1)/t) delta + 1/(2t) + 5 with t = 1/q
  const Rational t(1, q);
  const Rational first = ((Rational(2) * t * t + Rational(3) * t + Rational(1)) / t) * Rational(delta) +
                         Rational(1) / (Rational(2) * t) + Rational(5);
  // (1/6)((delta(delta+4) + 1)/t + 9 delta + 6)
  const Rational second =
      (Rational(delta * (delta + 4) + 1) / t + Rational(9 * delta + 6)) / Rational(6);
  return std::max(first, second);
}

Rational fractional_bound(std::int64_t q) {
  // 2/t^2 + 3/t + 3t + 4 with t = 1/q
  return Rational(2 * q * q + 3 * q + 4) + Rational(3, q);
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

CertOutcome start(const Graph& g, Theorem theorem, Rational t) {
  require_connected(g, "certification");
  CertOutcome out;
  out.theorem = theorem;
  out.n = g.order();
  out.m = g.size();
  out.min_degree = g.min_degree();
  out.t = t;
  return out;
}

void check(CertOutcome& out, bool ok, const std::string& what) {
  out.precondition_log.push_back(what + (ok ? ": ok" : ": FAILED"));
  if (!ok) out.verdict = Verdict::PreconditionFailed;
}

// Threshold comparison. `inclusive` marks the "eta1 <= threshold unless G is
// the exceptional graph" form; the others are strict inequalities.
void decide(CertOutcome& out, const Graph& g, const std::optional<ExtremalSpec>& exceptional, bool inclusive,
            const CertOptions& options) {
  out.band = options.band * std::abs(out.threshold);
  out.margin = out.threshold - out.eta1_graph;
  if (exceptional && recognize_family(g, *exceptional)) {
    out.verdict = Verdict::ExtremalException;
    out.diagnostics.push_back("graph is isomorphic to " + exceptional->to_string());
    return;
  }
  if (out.margin > out.band) {
    out.verdict = Verdict::Certified;
  } else if (out.margin >= -out.band) {
    out.verdict = Verdict::Inconclusive;
    out.diagnostics.push_back(inclusive ? "eta1 matches the threshold within the numeric band but the graph is not "
                                          "the exceptional graph (possible cospectral mate)"
                                        : "eta1 lies within the numeric band around the threshold");
  } else {
    out.verdict = Verdict::Inconclusive;
    out.diagnostics.push_back("eta1 exceeds the threshold by " + fmt(-out.margin));
  }
}

Rational binom2(std::int64_t k) { return Rational(k > 1 ? k * (k - 1) / 2 : 0); }

}  // namespace

std::optional<std::size_t> minimum_order(Theorem theorem, std::int64_t param, std::size_t delta) {
  const auto d = static_cast<std::int64_t>(delta);
  switch (theorem) {
    case Theorem::OneTough:
      if (d < 1) return std::nullopt;
      return static_cast<std::size_t>(std::max<std::int64_t>(11 * d, ceil_of(Rational(d * d + 4 * d, 2))));
    case Theorem::Fractional:
      if (param < 1) return std::nullopt;
      return static_cast<std::size_t>(ceil_of(fractional_bound(param)));
    case Theorem::OrderA:
      if (param < 2) return std::nullopt;
      return static_cast<std::size_t>(2 * param * param + 2 * param);
    case Theorem::OrderB:
      if (param < 1 || d < 1) return std::nullopt;
      return static_cast<std::size_t>(ceil_of(order_b_bound(param, d)));
  }
  return std::nullopt;
}

CertOutcome certify_1tough(const Graph& g, const CertOptions& options) {
  CertOutcome out = start(g, Theorem::OneTough, Rational(1));
  const std::size_t n = out.n;
  const std::size_t delta = out.min_degree;
  out.eta1_graph = eta1(g, options.perron);
  check(out, delta >= 2, "minimum degree " + std::to_string(delta) + " >= 2");
  if (delta >= 1) {
    const std::size_t need = *minimum_order(Theorem::OneTough, 1, delta);
    check(out, n >= need, "n = " + std::to_string(n) + " >= max(11 delta, delta^2/2 + 2 delta) = " + std::to_string(need));
  }
  if (out.verdict == Verdict::PreconditionFailed) return out;

  const CharPolyParams params = CharPolyParams::bstar(n, delta);
  out.threshold = perron_value(quotient_closed_form(params).entries, options.perron).value;
  decide(out, g, ExtremalSpec::min_degree_family(n, delta), true, options);
  return out;
}

CertOutcome certify_ttough_fractional(const Graph& g, std::int64_t q, const CertOptions& options) {
  if (q < 1) throw Error(ErrorKind::InvalidArgument, "q = 1/t must be a positive integer");
  CertOutcome out = start(g, Theorem::Fractional, Rational(1, q));
  const std::size_t n = out.n;
  out.eta1_graph = eta1(g, options.perron);
  const Rational bound = fractional_bound(q);
  const std::size_t need = *minimum_order(Theorem::Fractional, q, 0);
  check(out, Rational(static_cast<std::int64_t>(n)) >= bound,
        "n = " + std::to_string(n) + " >= 2/t^2 + 3/t + 3t + 4 = " + bound.to_string());
  if (out.verdict == Verdict::PreconditionFailed) return out;
  if (n == need && bound.den() != 1) {
    out.precondition_log.push_back("boundary: n is the ceiling of the non-integer order bound " + bound.to_string());
  }

  const CharPolyParams params = CharPolyParams::btilde(n, 1, static_cast<std::size_t>(q));
  out.threshold = perron_value(quotient_closed_form(params).entries, options.perron).value;
  decide(out, g, ExtremalSpec::fractional_family(n, static_cast<std::size_t>(q)), true, options);
  return out;
}

CertOutcome certify_order_a(const Graph& g, std::int64_t t, const CertOptions& options) {
  CertOutcome out = start(g, Theorem::OrderA, Rational(t));
  const auto n = static_cast<std::int64_t>(out.n);
  out.eta1_graph = eta1(g, options.perron);
  check(out, t >= 2, "integer t = " + std::to_string(t) + " >= 2");
  if (t >= 2) {
    check(out, n >= 2 * t * t + 2 * t, "n = " + std::to_string(n) + " >= 2t^2 + 2t = " + std::to_string(2 * t * t + 2 * t));
  }
  if (out.verdict == Verdict::PreconditionFailed) return out;

  out.threshold = Rational(2 * n * n + 2 * n - 4 * t, n).to_double();
  const Rational edge = binom2(n - 1) + Rational(t - 1);
  out.edge_bound = EdgeBound{edge, Rational(static_cast<std::int64_t>(out.m)) > edge};
  decide(out, g, std::nullopt, false, options);
  return out;
}

CertOutcome certify_order_b(const Graph& g, std::int64_t q, const CertOptions& options) {
  CertOutcome out = start(g, Theorem::OrderB, q >= 1 ? Rational(1, q) : Rational(0));
  const auto n = static_cast<std::int64_t>(out.n);
  const auto delta = static_cast<std::int64_t>(out.min_degree);
  out.eta1_graph = eta1(g, options.perron);
  check(out, q >= 1, "1/t = " + std::to_string(q) + " is a positive integer");
  if (q < 1) return out;
  // delta >= t + 1 with t = 1/q
  check(out, delta * q >= q + 1, "minimum degree " + std::to_string(delta) + " >= t + 1 = " + (Rational(1, q) + Rational(1)).to_string());
  if (delta >= 1) {
    const Rational bound = order_b_bound(q, delta);
    check(out, Rational(n) >= bound, "n = " + std::to_string(n) + " >= order bound " + bound.to_string());
  }
  if (out.verdict == Verdict::PreconditionFailed) return out;

  // 2n + 4 delta / t + 2 - 2 (delta + t)(2 delta t + delta + 2t) / (n t^2)
  const Rational t(1, q);
  const Rational dt(delta);
  const Rational threshold = Rational(2 * n + 2) + Rational(4) * dt / t -
                             Rational(2) * (dt + t) * (Rational(2) * dt * t + dt + Rational(2) * t) / (Rational(n) * t * t);
  out.threshold = threshold.to_double();
  const Rational edge = binom2(n - delta * q - 1) + (dt + t) * dt / t;
  out.edge_bound = EdgeBound{edge, Rational(static_cast<std::int64_t>(out.m)) > edge};
  decide(out, g, std::nullopt, false, options);
  return out;
}

CertOutcome certify(const Graph& g, Theorem theorem, std::int64_t param, const CertOptions& options) {
  switch (theorem) {
    case Theorem::OneTough: return certify_1tough(g, options);
    case Theorem::Fractional: return certify_ttough_fractional(g, param, options);
    case Theorem::OrderA: return certify_order_a(g, param, options);
    case Theorem::OrderB: return certify_order_b(g, param, options);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown theorem");
}

}  // namespace qdtough
