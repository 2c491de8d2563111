#include "doctest.h"
#include "oracles.hpp"
#include "qdtough/error.hpp"
#include "qdtough/family.hpp"
#include "qdtough/random.hpp"
#include "qdtough/toughness.hpp"

using namespace qdtough;

namespace {

OracleOptions unpruned() {
  OracleOptions o;
  o.pruned = false;
  return o;
}

void check_against_naive(const Graph& g) {
  const ToughnessReport r = toughness_exact(g);
  const auto ref = oracle::naive_toughness(g);
  REQUIRE(r.tau.is_infinite() == !ref.tau);
  if (ref.tau) {
    REQUIRE(r.tau.value() == *ref.tau);
    REQUIRE(r.tau_prime.value() == *ref.tau_prime);
    REQUIRE(r.tau_witness);
    REQUIRE(r.tau_witness->ratio == *ref.tau);
    REQUIRE(r.tau_prime_witness->ratio == *ref.tau_prime);
  }
}

}  // namespace

TEST_CASE("toughness examples") {
  const auto star = toughness_exact(star_graph(3));
  CHECK(star.tau.value() == Rational(1, 3));
  CHECK(star.tau_prime.value() == Rational(1, 2));
  CHECK(star.tau_witness->cut == std::vector<Vertex>{0});
  CHECK(star.tau_witness->components == 3);

  const auto c5 = toughness_exact(cycle_graph(5));
  CHECK(c5.tau.value() == Rational(1));
  CHECK(c5.tau_prime.value() == Rational(2));

  const auto fam = toughness_exact(build_family(ExtremalSpec(2, {5, 1, 1})));
  CHECK(fam.tau.value() == Rational(2, 3));
  CHECK(fam.tau_witness->cut == std::vector<Vertex>{0, 1});

  const auto fig2 = toughness_exact(build_family(ExtremalSpec(1, {17, 1, 1})));
  CHECK(fig2.tau.value() == Rational(1, 3));

  const auto k6 = toughness_exact(complete_graph(6));
  CHECK(k6.tau.is_infinite());
  CHECK(k6.tau.to_string() == "inf");
  CHECK_FALSE(k6.tau_witness);
}

TEST_CASE("oracle input checks") {
  OracleOptions small;
  small.max_order = 5;
  try {
    toughness_exact(cycle_graph(6), small);
    FAIL("expected capacity error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Capacity);
  }
  try {
    toughness_exact(empty_graph(3));
    FAIL("expected disconnected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Disconnected);
  }
}

TEST_CASE("pruned enumeration agrees with the naive oracle on random graphs") {
  Rng rng(17);
  for (int rep = 0; rep < 150; ++rep) {
    const Graph g = random_tree_plus(static_cast<std::size_t>(rng.between(1, 12)), rng.unit() * 0.7, rng);
    check_against_naive(g);
  }
}

TEST_CASE("pruned and unpruned enumeration agree on all connected graphs up to 7 vertices") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : oracle::connected_graphs(n)) {
      const auto a = toughness_exact(g);
      const auto b = toughness_exact(g, unpruned());
      REQUIRE(a.same_values(b));
    }
  }
}

TEST_CASE("t-tough decisions") {
  const Graph fig2 = build_family(ExtremalSpec(1, {17, 1, 1}));
  const auto r = is_t_tough(fig2, Rational(1, 2), ToughnessVariant::Tau);
  CHECK_FALSE(r.tough);
  REQUIRE(r.violation);
  CHECK(r.violation->cut == std::vector<Vertex>{0});
  CHECK(r.violation->ratio == Rational(1, 3));

  CHECK(is_t_tough(complete_graph(8), Rational(100), ToughnessVariant::Tau).tough);
  CHECK(is_t_tough(cycle_graph(6), Rational(1), ToughnessVariant::Tau).tough);
  CHECK_FALSE(is_t_tough(cycle_graph(6), Rational(11, 10), ToughnessVariant::Tau).tough);
  // Three alternate vertices of C_6 leave three components: 3/(3-1).
  CHECK(is_t_tough(cycle_graph(6), Rational(3, 2), ToughnessVariant::TauPrime).tough);
  CHECK_FALSE(is_t_tough(cycle_graph(6), Rational(2), ToughnessVariant::TauPrime).tough);
  CHECK_THROWS_AS(is_t_tough(cycle_graph(6), Rational(0), ToughnessVariant::Tau), Error);
}

TEST_CASE("is_t_tough is consistent with the exact values") {
  Rng rng(23);
  const Rational ts[] = {Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1), Rational(3, 2), Rational(2)};
  for (int rep = 0; rep < 120; ++rep) {
    const Graph g = random_tree_plus(static_cast<std::size_t>(rng.between(3, 13)), rng.unit() * 0.8, rng);
    const ToughnessReport exact = toughness_exact(g);
    for (const Rational& t : ts) {
      const bool tau_ok = exact.tau.is_infinite() || exact.tau.value() >= t;
      const bool prime_ok = exact.tau_prime.is_infinite() || exact.tau_prime.value() >= t;
      const auto a = is_t_tough(g, t, ToughnessVariant::Tau);
      const auto b = is_t_tough(g, t, ToughnessVariant::TauPrime);
      REQUIRE(a.tough == tau_ok);
      REQUIRE(b.tough == prime_ok);
      if (!a.tough) CHECK(a.violation->ratio < t);
      if (!b.tough) CHECK(b.violation->ratio < t);
    }
  }
}

TEST_CASE("tau-prime dominates tau on non-complete graphs") {
  Rng rng(29);
  for (int rep = 0; rep < 80; ++rep) {
    const Graph g = random_tree_plus(static_cast<std::size_t>(rng.between(3, 14)), rng.unit(), rng);
    const auto r = toughness_exact(g);
    if (!g.is_complete()) CHECK(r.tau_prime.value() > r.tau.value());
  }
}

TEST_CASE("is_t_tough flips exactly at tau") {
  Rng rng(83);
  std::size_t tested = 0;
  while (tested < 100) {
    const auto n = static_cast<std::size_t>(rng.between(3, 14));
    const Graph g = random_tree_plus(n, rng.unit() * 0.7, rng);
    if (g.is_complete()) continue;
    const Rational tau = toughness_exact(g).tau.value();
    const auto nn = static_cast<std::int64_t>(n * n);
    REQUIRE(is_t_tough(g, tau, ToughnessVariant::Tau).tough);
    REQUIRE_FALSE(is_t_tough(g, tau + Rational(1, nn), ToughnessVariant::Tau).tough);
    ++tested;
  }
}

TEST_CASE("pruned and unpruned enumeration agree on random graphs up to 14 vertices") {
  Rng rng(89);
  for (int rep = 0; rep < 50; ++rep) {
    const Graph g = random_tree_plus(static_cast<std::size_t>(rng.between(9, 14)), rng.unit(), rng);
    REQUIRE(toughness_exact(g).same_values(toughness_exact(g, unpruned())));
  }
}

TEST_CASE("minimum-degree family has toughness delta/(delta+1)") {
  for (std::size_t delta = 2; delta <= 3; ++delta)
    for (std::size_t n = 2 * delta + 1; n <= 14; ++n) {
      const Graph g = build_family(ExtremalSpec::min_degree_family(n, delta));
      CHECK(toughness_exact(g).tau.value() ==
            Rational(static_cast<std::int64_t>(delta), static_cast<std::int64_t>(delta + 1)));
    }
}
