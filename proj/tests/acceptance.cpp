// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 on any
// failure. Independent references come from tests/support/oracles.hpp.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qdtough/certifier.hpp"
#include "qdtough/config.hpp"
#include "qdtough/extremal.hpp"
#include "qdtough/family.hpp"
#include "qdtough/lemmas.hpp"
#include "qdtough/random.hpp"
#include "qdtough/report.hpp"
#include "qdtough/spectral.hpp"
#include "qdtough/toughness.hpp"

using namespace qdtough;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << "; " << checks_ << " checks";
    if (failures_ > 0) os << ", " << failures_ << " failed, first: " << first_failure_;
    return {failures_ == 0, os.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

Outcome complete_graph_spectrum() {
  Checker c;
  double worst = 0.0;
  for (std::size_t n = 2; n <= 200; ++n) {
    const double err = std::abs(eta1(complete_graph(n)) - (2.0 * n - 2.0));
    worst = std::max(worst, err);
    c.expect(err <= 1e-9, "K_" + std::to_string(n) + " error " + num(err));
  }
  return c.outcome("max |eta1(K_n) - (2n-2)| = " + num(worst));
}

Outcome quotient_equality() {
  Checker c;
  double worst = 0.0;
  for (std::size_t delta = 2; delta <= 4; ++delta) {
    const std::size_t lo = *minimum_order(Theorem::OneTough, 1, delta);
    for (std::size_t n = lo; n <= lo + 10; ++n) {
      const auto params = CharPolyParams::bstar(n, delta);
      const double rho = perron_value(quotient_closed_form(params).entries).value;
      const Graph g = build_family(underlying_family(params));
      const double full = eta1(g);
      const double ref = oracle::eta1(g);
      const double rel = std::abs(rho - full) / full;
      worst = std::max(worst, rel);
      c.expect(rel <= 1e-8, params.to_string() + " rel " + num(rel));
      c.expect(std::abs(rho - ref) <= 1e-8 * ref, params.to_string() + " vs dense eigensolver");
    }
  }
  return c.outcome("max relative gap " + num(worst));
}

Outcome edge_deletion() {
  Checker c;
  double smallest = 1e300;
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng(Rng::derive(kDefaultSeed, i));
    const auto n = static_cast<std::size_t>(rng.between(6, 30));
    Graph g;
    std::optional<Edge> e;
    // A tree has no removable edge; redraw from the same stream.
    do {
      g = random_connected_graph(n, 0.15 + 0.6 * rng.unit(), rng);
      e = random_removable_edge(g, rng);
    } while (!e);
    Graph h = g;
    h.remove_edge(e->first, e->second);
    const double gap = eta1(h) - eta1(g);
    smallest = std::min(smallest, gap);
    c.expect(gap > 1e-9, "n=" + std::to_string(n) + " gap " + num(gap));
    const double ref = oracle::eta1(h) - oracle::eta1(g);
    c.expect(std::abs(ref - gap) <= 1e-7 * oracle::eta1(h), "dense eigensolver disagrees");
  }
  return c.outcome("200 graphs, smallest increase " + num(smallest));
}

Outcome wiener_bound() {
  Checker c;
  auto bound_gap = [](const Graph& g) { return eta1(g) - 4.0 * static_cast<double>(oracle::wiener(g)) / g.order(); };
  Rng rng(kDefaultSeed);
  std::size_t tested = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const Graph g = random_tree_plus(static_cast<std::size_t>(rng.between(2, 35)), rng.unit(), rng);
    c.expect(bound_gap(g) >= -1e-9, "random graph below bound");
    ++tested;
  }
  for (std::size_t n = 3; n <= 40; ++n) {
    const double gc = bound_gap(cycle_graph(n));
    c.expect(std::abs(gc) <= 1e-8, "C_" + std::to_string(n) + " not tight: " + num(gc));
    ++tested;
  }
  for (std::size_t n = 2; n <= 40; ++n) {
    c.expect(std::abs(bound_gap(complete_graph(n))) <= 1e-8, "K_" + std::to_string(n) + " not tight");
    ++tested;
  }
  for (std::size_t r = 1; r <= 10; ++r) {
    c.expect(std::abs(bound_gap(complete_bipartite(r, r))) <= 1e-8, "K_{r,r} not tight at r=" + std::to_string(r));
    ++tested;
  }
  double weakest = 1e300;
  for (std::size_t k = 2; k <= 39; ++k) {
    const double gs = bound_gap(star_graph(k));
    weakest = std::min(weakest, gs);
    c.expect(gs >= 1e-4, "star with " + std::to_string(k) + " leaves not strict");
    ++tested;
  }
  for (std::size_t n = 3; n <= 40; ++n) {
    const double gp = bound_gap(path_graph(n));
    weakest = std::min(weakest, gp);
    c.expect(gp >= 1e-4, "P_" + std::to_string(n) + " not strict");
    ++tested;
  }
  return c.outcome(std::to_string(tested) + " graphs, smallest strict gap " + num(weakest));
}

Outcome wiener_closed_form() {
  Checker c;
  const Graph g = build_family(ExtremalSpec(2, {18, 1, 1}));
  const std::int64_t w = oracle::wiener(g);
  c.expect(w == 268, "Floyd-Warshall W = " + std::to_string(w));
  c.expect(wiener_index(g) == 268, "BFS W");
  std::size_t fired = 0;
  std::string flagged;
  for (const auto& check : min_degree_family_wiener(22, 2)) {
    if (!check.matches()) {
      ++fired;
      flagged = check.form + " = " + check.value.to_string();
    }
  }
  const auto checks = min_degree_family_wiener(22, 2);
  c.expect(checks[1].matches(), "simplified closed form");
  c.expect(!checks[2].matches() && checks[2].value == Rational(473, 2), "printed form value");
  c.expect(fired == 1, "detector fired " + std::to_string(fired) + " times");
  return c.outcome("W = 268; flagged: " + flagged + " vs 268");
}

Outcome toughness_exactness() {
  Checker c;
  const auto star = toughness_exact(star_graph(3));
  c.expect(star.tau.value() == Rational(1, 3), "tau(K_{1,3})");
  c.expect(star.tau_prime.value() == Rational(1, 2), "tau'(K_{1,3})");
  const auto c5 = toughness_exact(cycle_graph(5));
  c.expect(c5.tau.value() == Rational(1), "tau(C_5)");
  c.expect(c5.tau_prime.value() == Rational(2), "tau'(C_5)");
  c.expect(toughness_exact(build_family(ExtremalSpec(2, {5, 1, 1}))).tau.value() == Rational(2, 3),
           "tau(K_2 v (K_5 + 2K_1))");
  c.expect(toughness_exact(build_family(ExtremalSpec(1, {17, 1, 1}))).tau.value() == Rational(1, 3),
           "tau(K_1 v (K_17 + 2K_1))");

  OracleOptions unpruned;
  unpruned.pruned = false;
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const Graph& g : oracle::connected_graphs(n)) {
      const auto a = toughness_exact(g);
      const auto b = toughness_exact(g, unpruned);
      c.expect(a.same_values(b), "pruned/unpruned differ on " + std::to_string(n) + " vertices");
      if (n <= 6) {
        const auto ref = oracle::naive_toughness(g);
        c.expect(a.tau.is_infinite() ? !ref.tau : (ref.tau && a.tau.value() == *ref.tau), "naive oracle disagrees");
      }
      ++graphs;
    }
  }
  c.expect(graphs == 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117, "connected graph count " + std::to_string(graphs));
  return c.outcome("6 exact values; pruned == unpruned on " + std::to_string(graphs) + " connected graphs");
}

Outcome charpoly_agreement() {
  Checker c;
  std::vector<CharPolyParams> grid;
  // delta, s, q in 1..4 and every admissible n up to 60.
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::size_t n = 2 * d + 1; n <= 60; ++n) grid.push_back(CharPolyParams::bstar(n, d));
  for (std::size_t s = 1; s <= 4; ++s)
    for (std::size_t q = 1; q <= 4; ++q)
      for (std::size_t n = s + s * q + 1; n <= 60; ++n) grid.push_back(CharPolyParams::btilde(n, s, q));
  for (std::size_t d = 1; d <= 4; ++d)
    for (std::size_t s = 1; s <= d; ++s)
      for (std::size_t n = s + s * (d - s + 1) + 1; n <= 60; ++n) grid.push_back(CharPolyParams::b2(n, d, s));

  Rng rng(kDefaultSeed);
  report::json listed = report::json::array();
  std::size_t kinds_flagged[3] = {0, 0, 0};
  std::size_t kinds_agree[3] = {0, 0, 0};
  for (const auto& params : grid) {
    const auto pub = published_charpoly(params);
    const auto discrepancies = charpoly_discrepancies(params);
    auto corrected = pub;
    for (const auto& d : discrepancies) corrected[2 - d.power] = d.determinant;

    Eigen::MatrixXd b(3, 3);
    const auto closed = quotient_closed_form(params).entries;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) b(i, j) = closed(i, j);

    bool agrees = true;
    for (int k = 0; k < 20; ++k) {
      const double x = rng.unit() * 6.0 * static_cast<double>(params.n);
      const CharPolyValue v = charpoly_eval(params, x);
      if (v.relative_error() > 1e-6) agrees = false;
      const double ref = (x * Eigen::MatrixXd::Identity(3, 3) - b).determinant();
      const double fixed = ((x + corrected[0]) * x + corrected[1]) * x + corrected[2];
      c.expect(std::abs(fixed - ref) <= 1e-6 * v.scale, params.to_string() + " corrected cubic disagrees at x=" + num(x));
      c.expect(std::abs(v.det_value - ref) <= 1e-6 * v.scale, params.to_string() + " determinant cubic disagrees");
    }
    const auto kind = static_cast<std::size_t>(params.kind);
    if (agrees) {
      ++kinds_agree[kind];
      // Agreement at every sample must mean no coefficient is off.
      c.expect(discrepancies.empty(), params.to_string() + " agrees but lists discrepancies");
    } else {
      ++kinds_flagged[kind];
      c.expect(!discrepancies.empty(), params.to_string() + " disagrees silently");
    }
    for (const auto& d : discrepancies) {
      listed.push_back({{"matrix", to_string(params.kind)},
                        {"params", params.to_string()},
                        {"power", d.power},
                        {"published", d.published},
                        {"determinant", d.determinant}});
    }
  }
  std::ostringstream os;
  os << grid.size() << " parameter points x 20 samples; agree/flagged: B*=" << kinds_agree[0] << "/"
     << kinds_flagged[0] << " Btilde=" << kinds_agree[1] << "/" << kinds_flagged[1] << " B2=" << kinds_agree[2]
     << "/" << kinds_flagged[2] << "; " << listed.size() << " coefficient discrepancies listed";
  std::cout << "  discrepancy report (first 3 of " << listed.size() << "): ";
  report::json head = report::json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(3, listed.size()); ++i) head.push_back(listed[i]);
  std::cout << head.dump() << "\n";
  return c.outcome(os.str());
}

Outcome family_monotonicity() {
  Checker c;
  Rng rng(kDefaultSeed);
  double smallest = 1e300;
  std::size_t strict_cases = 0;
  for (int i = 0; i < 100; ++i) {
    const FamilyTuple t = random_valid_family_tuple(rng);
    const ComparisonRecord r = compare_families(t.s, t.parts, t.p);
    c.expect(r.premises_hold, r.given.to_string() + " fails a premise");
    c.expect(r.difference >= -1e-8, r.given.to_string() + " diff " + num(r.difference));
    if (!r.identical) {
      ++strict_cases;
      smallest = std::min(smallest, r.difference);
      c.expect(r.difference > 0.0, r.given.to_string() + " not strictly above");
    }
    if (r.given.order() <= 60) {
      c.expect(std::abs(r.eta1_given - oracle::eta1(build_family(r.given))) <= 1e-8 * r.eta1_given,
               "quotient eta1 disagrees with dense eigensolver");
    }
  }
  return c.outcome("100 tuples, " + std::to_string(strict_cases) + " strict, smallest difference " + num(smallest));
}

Outcome sweep_soundness() {
  Checker c;
  struct Setting {
    Theorem theorem;
    std::int64_t param;
    std::size_t n_min, n_max;
  };
  const Setting settings[] = {{Theorem::OneTough, 1, 22, 22},
                              {Theorem::Fractional, 2, 20, 20},
                              {Theorem::OrderA, 2, 12, 20},
                              {Theorem::OrderB, 1, 18, 18}};
  std::ostringstream os;
  for (const auto& s : settings) {
    SweepConfig config;
    config.theorem = s.theorem;
    config.param = s.param;
    config.n_min = s.n_min;
    config.n_max = s.n_max;
    config.delta = 2;
    config.count = 500;
    const SweepReport r = falsify_sweep(config);
    const std::string label = theorem_label(s.theorem);
    c.expect(r.tau_prime_violations == 0, label + " tau' violations");
    c.expect(r.extremal_certified == 0, label + " certified an exceptional graph");
    c.expect(r.oracle_checked == r.certified, label + " certified instance skipped the oracle");
    for (const auto& inst : r.instances) {
      if (inst.verdict == Verdict::Certified && inst.edge_bound_satisfied) {
        c.expect(*inst.edge_bound_satisfied, label + " certified without the implied edge bound");
      }
    }
    os << label << ": certified " << r.certified << ", exceptional " << r.extremal_exceptions << ", tau' viol "
       << r.tau_prime_violations << ", tau viol " << r.tau_violations << (s.theorem == Theorem::OrderB ? "" : "; ");
  }
  return c.outcome(os.str());
}

Outcome exceptional_graphs() {
  Checker c;
  Rng rng(kDefaultSeed);
  std::size_t tested = 0;
  for (std::size_t delta = 2; delta <= 4; ++delta) {
    const std::size_t lo = *minimum_order(Theorem::OneTough, 1, delta);
    for (std::size_t n = lo; n <= lo + 15; ++n) {
      const Graph g = build_family(ExtremalSpec::min_degree_family(n, delta)).relabeled(random_permutation(n, rng));
      const auto v = certify_1tough(g).verdict;
      c.expect(v == Verdict::ExtremalException, "figure-1 graph n=" + std::to_string(n) + ": " + to_string(v));
      ++tested;
    }
  }
  for (std::int64_t q = 1; q <= 5; ++q) {
    const std::size_t lo = *minimum_order(Theorem::Fractional, q, 0);
    for (std::size_t n = lo; n <= lo + 15; ++n) {
      const Graph g = build_family(ExtremalSpec::fractional_family(n, static_cast<std::size_t>(q)))
                          .relabeled(random_permutation(n, rng));
      const auto v = certify_ttough_fractional(g, q).verdict;
      c.expect(v == Verdict::ExtremalException, "figure-2 graph q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                                    ": " + to_string(v));
      ++tested;
    }
  }
  return c.outcome(std::to_string(tested) + " exceptional graphs, all ExtremalException");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "complete-graph spectrum", 5, complete_graph_spectrum},
      {2, "quotient equality", 30, quotient_equality},
      {3, "edge-deletion monotonicity", 60, edge_deletion},
      {4, "Wiener bound", 60, wiener_bound},
      {5, "Wiener closed form", 10, wiener_closed_form},
      {6, "toughness oracle exactness", 120, toughness_exactness},
      {7, "characteristic polynomial agreement", 60, charpoly_agreement},
      {8, "family monotonicity", 60, family_monotonicity},
      {9, "certifier soundness sweep", 600, sweep_soundness},
      {10, "exceptional graphs", 60, exceptional_graphs},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = cr.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < cr.budget_seconds;
    const bool ok = out.passed && in_time;
    if (!ok) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", secs, cr.budget_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << " [" << cr.id << "] " << cr.name << " (" << timing << "): " << out.detail
              << (in_time ? "" : " [over time budget]") << "\n";
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << "\n";
  return failed == 0 ? 0 : 1;
}
