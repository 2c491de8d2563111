#include "doctest.h"
#include "qdtough/config.hpp"
#include "qdtough/error.hpp"
#include "qdtough/family.hpp"
#include "qdtough/lemmas.hpp"
#include "qdtough/random.hpp"
#include "qdtough/rational.hpp"
#include "qdtough/report.hpp"

using namespace qdtough;

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(3).to_string() == "3/1");
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("2") == Rational(2));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK(ExtRational::infinity() > ExtRational(Rational(1000)));
}

TEST_CASE("run configuration validation") {
  RunConfig ok;
  CHECK_NOTHROW(ok.validate());
  RunConfig bad = ok;
  bad.oracle_cap = 3;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = ok;
  bad.verdict_band = 0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = ok;
  bad.format = "xml";
  CHECK_THROWS_AS(bad.validate(), Error);
  RunConfig custom;
  custom.verdict_band = 1e-5;
  custom.oracle_cap = 10;
  CHECK(custom.cert().band == 1e-5);
  CHECK(custom.oracle().max_order == 10);
}

TEST_CASE("seeded streams are reproducible and independent") {
  Rng a(Rng::derive(1, 0)), b(Rng::derive(1, 0)), c(Rng::derive(1, 1));
  for (int i = 0; i < 10; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }
  Rng r(5);
  for (int i = 0; i < 1000; ++i) {
    const auto v = r.between(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
    const double u = r.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  Rng g(9);
  for (int i = 0; i < 20; ++i) CHECK(is_connected(random_connected_graph(12, 0.2, g)));
}

TEST_CASE("documents round numbers to 12 significant digits") {
  CHECK(report::round12(1.0 / 3.0) == 0.333333333333);
  CHECK(report::round12(54.00979709812345) == 54.0097970981);
  const auto doc = report::extremal_document(ExtremalSpec(2, {1, 1}), "g6", "C^\n");
  CHECK(doc["schema"] == "qdtough.extremal/1");
  CHECK(doc["m"] == 5);
  CHECK(report::dump(doc) == report::dump(doc));
  CHECK(report::dump(doc).back() == '\n');
}

TEST_CASE("lemma suite names and a fast check") {
  CHECK(lemma_names() == std::vector<std::string>{"2.1", "2.2", "2.3", "2.4", "2.5", "3.1"});
  LemmaSuiteOptions options;
  options.cases = 20;
  for (const auto& c : verify_lemma("3.1", options)) CHECK(c.passed);
  CHECK_THROWS_AS(verify_lemma("9.9", options), Error);
}
