#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "homalg/harness.hpp"

using namespace homalg;

namespace {

TrialConfig quick(const std::string& fixture) {
  TrialConfig cfg;
  cfg.trials = 2;
  cfg.max_degree = 3;
  cfg.coefficient_bound = 2;
  cfg.fixture = fixture;
  return cfg;
}

}  // namespace

TEST_CASE("the generator is a pure function of its seed") {
  Rng a(1729), b(1729), c(42);
  bool diverged = false;
  for (int i = 0; i < 64; ++i) {
    const uint64_t x = a.next();
    CHECK(x == b.next());
    if (x != c.next()) diverged = true;
  }
  CHECK(diverged);
  Rng r(7);
  for (int i = 0; i < 200; ++i) {
    const long v = r.int_in(-3, 5);
    CHECK(v >= -3);
    CHECK(v <= 5);
  }
  for (int i = 0; i < 200; ++i) {
    const Rational q = r.rational(3);
    CHECK(q.denominator() <= 3);
    CHECK(q.numerator() <= 3);
    CHECK(q.numerator() >= -3);
  }
  CHECK(Rng(11).rational(0).is_zero());
}

TEST_CASE("sub-seeds separate runs, identities, and trials") {
  const uint64_t base = sub_seed(1729, "mu-square", 0);
  CHECK(base == sub_seed(1729, "mu-square", 0));
  CHECK(base != sub_seed(1729, "mu-square", 1));
  CHECK(base != sub_seed(1729, "delta-squared", 0));
  CHECK(base != sub_seed(1730, "mu-square", 0));
}

TEST_CASE("random cochains are compatible and reproducible") {
  const AlgebraPtr a = fixtures::dual_numbers_twisted(Rational(2));
  for (int n = 1; n <= 3; ++n) {
    Rng r1(99), r2(99);
    const Cochain f = random_cochain(a, n, r1, 3);
    const Cochain g = random_cochain(a, n, r2, 3);
    CHECK(f.degree() == n);
    CHECK(is_alpha_compatible(f));
    CHECK(f == g);
  }
  const DialgebraPtr d = fixtures::bimodule_maps_swapped();
  for (int n = 1; n <= 2; ++n) {
    Rng r1(99), r2(99);
    const TreeCochain f = random_tree_cochain(d, n, r1, 3);
    const TreeCochain g = random_tree_cochain(d, n, r2, 3);
    CHECK(f.degree() == n);
    CHECK(is_alpha_compatible(f));
    CHECK(f == g);
  }
}

TEST_CASE("the catalogue is fixed, ordered, and complete") {
  const std::vector<std::string> expected = {
      "operad-assoc-1", "operad-assoc-2", "operad-identity",
      "pre-jacobi", "distributivity", "higher-homotopy",
      "delta-squared", "mu-square", "pi-square", "pipi-table",
      "d-vs-delta-sign", "bracket-antisym",
      "leibniz-on-cohomology", "graded-comm-on-cohomology",
      "embed-chain-map",
      "preoperadic-1", "preoperadic-2", "preoperadic-3", "preoperadic-4",
      "presimplicial",
  };
  CHECK(identity_catalogue() == expected);
}

TEST_CASE("unknown identity names and fixture names are refused") {
  Session s(quick("dual"));
  CHECK_THROWS_AS(s.check("socle-filtration"), std::invalid_argument);
  CHECK_THROWS_AS(Session(quick("no-such-fixture")), std::invalid_argument);
}

TEST_CASE("tree identities are skipped when no dialgebra is present") {
  TrialConfig cfg = quick("all");
  FixtureRegistry reg;
  reg.algebras.push_back(fixtures::dual_numbers());
  Session s(cfg, std::move(reg));
  CHECK(s.check("mu-square").outcome == Outcome::pass);
  CHECK(s.check("pi-square").outcome == Outcome::skip);
  CHECK(s.check("presimplicial").outcome == Outcome::pass);  // pure trees
}

TEST_CASE("an invalid fixture fails every check with a named detail") {
  Session s(quick("dual-perturbed"));
  const Verdict v = s.check("mu-square");
  CHECK(v.outcome == Outcome::fail);
  CHECK(v.detail.find("dual-perturbed") != std::string::npos);
  const std::vector<Verdict> all = s.run_all();
  REQUIRE(all.size() == 1);  // validation preamble short-circuits
  CHECK(all[0].identity == "validate-fixtures");
  CHECK(all[0].outcome == Outcome::fail);
  CHECK(any_failed(all));
}

TEST_CASE("a full run on one fixture is deterministic and green") {
  const TrialConfig cfg = quick("dual");
  Session s1(cfg), s2(cfg);
  const std::vector<Verdict> a = s1.run_all();
  const std::vector<Verdict> b = s2.run_all();
  REQUIRE(a.size() == identity_catalogue().size() + 1);
  CHECK(a[0].identity == "validate-fixtures");
  CHECK(a[0].outcome == Outcome::pass);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].identity == b[i].identity);
    CHECK(a[i].outcome == b[i].outcome);
    CHECK(a[i].detail == b[i].detail);
    CHECK(a[i].outcome != Outcome::fail);
  }
  for (size_t i = 1; i < a.size(); ++i) {
    CHECK(a[i].identity == identity_catalogue()[i - 1]);
  }
  CHECK_FALSE(any_failed(a));
  CHECK(render_text(a, cfg) == render_text(b, cfg));
  CHECK(render_tsv(a, cfg) == render_tsv(b, cfg));
}

TEST_CASE("reports carry the replay configuration") {
  const TrialConfig cfg = quick("dual");
  const std::vector<Verdict> v = {
      {"mu-square", Outcome::pass, ""},
      {"pi-square", Outcome::skip, "no dialgebra fixture applies"},
      {"delta-squared", Outcome::fail, "fixture=dual trial=3"},
  };
  CHECK(any_failed(v));
  const std::string text = render_text(v, cfg);
  CHECK(text.find("FAIL  delta-squared") != std::string::npos);
  CHECK(text.find("seed=1729") != std::string::npos);
  CHECK(text.find("trials=2") != std::string::npos);
  const std::string tsv = render_tsv(v, cfg);
  CHECK(tsv.rfind("identity\toutcome\tdetail\n", 0) == 0);
  CHECK(tsv.find("pi-square\tskip\t") != std::string::npos);
  CHECK(tsv.find("pass=1 fail=1 skip=1") != std::string::npos);
  CHECK_FALSE(any_failed({{"x", Outcome::pass, ""}, {"y", Outcome::skip, ""}}));
}
