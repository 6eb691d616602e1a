#include <doctest.h>

#include <stdexcept>

#include "argrank/culpability.hpp"

using namespace argrank;

namespace {

Formula f(const char* text) { return parse_formula(text); }

ABF make_abf(std::vector<Formula> ab) { return validate_abf({}, std::move(ab)); }

}  // namespace

TEST_CASE("rational: normalization and sign handling") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(-3, -6).num == 1);
  CHECK(Rational(-3, -6).den == 2);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(7).den == 1);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational: arithmetic and order") {
  CHECK(Rational(1, 6) + Rational(1, 3) == Rational(1, 2));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(2, 3) > Rational(1, 2));
  CHECK(Rational(1, 2).to_double() == 0.5);
}

TEST_CASE("rational: rendering") {
  CHECK(Rational(0).str() == "0");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-1, 3).str() == "-1/3");
  CHECK(Rational(4, 2).str() == "2");
}

TEST_CASE("five formulas, a contradiction and a three-way clash") {
  ABF abf = make_abf({f("p & !p"), f("q"), f("r"), f("!q | !r"), f("s")});
  const Formula pnp = f("p & !p"), q = f("q"), r = f("r"), clash = f("!q | !r"),
                s = f("s");

  CulpabilityReport d = culp_drastic(abf);
  CHECK(d.measure_id == "drastic");
  CHECK(d.exact);
  CHECK(*d.exact_value_of(s) == Rational(0));
  for (const Formula& g : {pnp, q, r, clash}) {
    CHECK(*d.exact_value_of(g) == Rational(1));
  }

  CulpabilityReport star = culp_share(abf);
  CHECK(*star.exact_value_of(s) == Rational(0));
  for (const Formula& g : {pnp, q, r, clash}) {
    CHECK(*star.exact_value_of(g) == Rational(1, 2));
  }

  CulpabilityReport w = culp_weighted(abf);
  CHECK(*w.exact_value_of(s) == Rational(0));
  CHECK(*w.exact_value_of(pnp) == Rational(1, 4));
  for (const Formula& g : {q, r, clash}) {
    CHECK(*w.exact_value_of(g) == Rational(1, 12));
  }
}

TEST_CASE("share and weighted can disagree about who is worst") {
  ABF abf = make_abf({f("p & !p"), f("q"), f("!q & r"), f("!q & s")});
  const Formula pnp = f("p & !p"), q = f("q");

  CulpabilityReport star = culp_share(abf);
  CHECK(*star.exact_value_of(pnp) == Rational(1, 3));
  CHECK(*star.exact_value_of(q) == Rational(2, 3));
  CHECK(*star.exact_value_of(f("!q & r")) == Rational(1, 3));

  // the size weighting happens to even them out here
  CulpabilityReport w = culp_weighted(abf);
  CHECK(*w.exact_value_of(pnp) == Rational(1, 5));
  CHECK(*w.exact_value_of(q) == Rational(1, 5));
  CHECK(*w.exact_value_of(f("!q & r")) == Rational(1, 10));
  CHECK(*w.exact_value_of(f("!q & s")) == Rational(1, 10));

  // the ranking-induced measure does separate them
  CulpabilityReport induced =
      induced_culpability(abf, DiagramPolicy::Powerset, 1e-10);
  CHECK_FALSE(induced.exact);
  CHECK(*induced.real_value_of(pnp) > *induced.real_value_of(q) + 1e-6);
}

TEST_CASE("consistent KB: every measure is all zero") {
  ABF abf = make_abf({f("p"), f("q"), f("p -> q")});
  for (const CulpabilityReport& rep :
       {culp_drastic(abf), culp_share(abf), culp_weighted(abf)}) {
    for (const Rational& v : rep.exact_values) CHECK(v == Rational(0));
  }
  CulpabilityReport induced = induced_culpability(abf, DiagramPolicy::Powerset);
  for (double v : induced.real_values) CHECK(v < 1e-6);
}

TEST_CASE("induced measure: blamed assumptions outrank free ones") {
  ABF abf = make_abf({f("p"), f("!p"), f("q")});
  for (DiagramPolicy policy :
       {DiagramPolicy::Powerset, DiagramPolicy::SingletonsTop}) {
    CulpabilityReport rep = induced_culpability(abf, policy, 1e-10);
    CHECK(rep.measure_id == "induced");
    CHECK(*rep.real_value_of(f("p")) > 0.1);
    CHECK(*rep.real_value_of(f("!p")) > 0.1);
    CHECK(*rep.real_value_of(f("p")) ==
          doctest::Approx(*rep.real_value_of(f("!p"))).epsilon(1e-9));
    CHECK(*rep.real_value_of(f("q")) < *rep.real_value_of(f("p")));
  }
}

TEST_CASE("lookup by formula handles misses and mode mismatches") {
  ABF abf = make_abf({f("p"), f("!p")});
  CulpabilityReport d = culp_drastic(abf);
  CHECK_FALSE(d.exact_value_of(f("r")).has_value());
  CHECK(d.real_value_of(f("p")) == 1.0);  // exact reports answer real queries too

  CulpabilityReport induced = induced_culpability(abf, DiagramPolicy::Powerset);
  CHECK_FALSE(induced.exact_value_of(f("p")).has_value());
  CHECK(induced.real_value_of(f("p")).has_value());
}
