#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "argrank/errors.hpp"
#include "argrank/kb_analysis.hpp"
#include "argrank/postulates.hpp"

using namespace argrank;

namespace {

Formula f(const char* text) { return parse_formula(text); }

ABF make_abf(std::vector<Formula> gamma, std::vector<Formula> ab) {
  PremiseSet g;
  for (const Formula& x : gamma) g.insert(x);
  return validate_abf(std::move(g), std::move(ab));
}

struct Prepared {
  AttackDiagram diagram;
  Ranking ranking;
};

Prepared prepare(const ABF& abf) {
  Prepared p{build_attack_diagram(abf, DiagramPolicy::Powerset), {}};
  p.ranking = categoriser(p.diagram.af, 1e-10);
  return p;
}

}  // namespace

TEST_CASE("all ten checks pass on the tire KB") {
  Prepared p = prepare(make_abf({}, {f("p"), f("!p"), f("q")}));
  const AbstractAF& af = p.diagram.af;
  const Ranking& r = p.ranking;

  for (const PostulateVerdict& v :
       {check_void_precedence(af, r), check_monotony(af, r),
        check_counter_transitivity(af, r),
        check_void_best_rank(af, r, best_score(r.semantics_id)),
        check_logical_void_precedence(p.diagram, r),
        check_freeness(p.diagram, r), check_dominance(p.diagram, r),
        check_blame(p.diagram, r)}) {
    CAPTURE(v.postulate_id);
    CHECK(v.passed);
    CHECK(v.applicable);
    CHECK_FALSE(v.counterexample.has_value());
  }

  // falsity holds vacuously here and says so
  PostulateVerdict falsity = check_falsity(p.diagram, r);
  CHECK(falsity.passed);
  CHECK_FALSE(falsity.note.empty());

  // consistency does not apply to an inconsistent KB
  PostulateVerdict consistency = check_consistency(p.diagram, r);
  CHECK(consistency.passed);
  CHECK_FALSE(consistency.applicable);
  CHECK_FALSE(consistency.note.empty());
}

TEST_CASE("graph checks reject a ranking that inverts a chain") {
  AbstractAF af;
  af.labels = {"a", "b"};
  af.add_edge(0, 1);
  af.finalize();

  Ranking bad;
  bad.semantics_id = "categoriser";
  bad.scores = {0.2, 1.0};  // attacked b above unattacked a

  PostulateVerdict vp = check_void_precedence(af, bad);
  CHECK_FALSE(vp.passed);
  REQUIRE(vp.counterexample.has_value());
  CHECK(vp.counterexample->items == std::vector<std::string>{"b", "a"});
  CHECK(vp.counterexample->scores == std::vector<double>{1.0, 0.2});
  CHECK_FALSE(vp.counterexample->detail.empty());

  CHECK_FALSE(check_monotony(af, bad).passed);
  CHECK_FALSE(check_counter_transitivity(af, bad).passed);
  CHECK_FALSE(check_void_best_rank(af, bad, 1.0).passed);

  // the honest ranking satisfies all four
  Ranking good = categoriser(af);
  CHECK(check_void_precedence(af, good).passed);
  CHECK(check_monotony(af, good).passed);
  CHECK(check_counter_transitivity(af, good).passed);
  CHECK(check_void_best_rank(af, good, 1.0).passed);
}

TEST_CASE("KB checks reject targeted corruptions") {
  ABF tire = make_abf({}, {f("p"), f("!p"), f("q")});
  Prepared p = prepare(tire);

  SUBCASE("free subset pushed down") {
    Ranking bad = p.ranking;
    bad.scores[p.diagram.node_of(0)] = 0.01;
    CHECK_FALSE(check_logical_void_precedence(p.diagram, bad).passed);
    CHECK_FALSE(check_freeness(p.diagram, bad).passed);
  }

  SUBCASE("blamed singleton at the top") {
    Ranking bad = p.ranking;
    bad.scores[p.diagram.node_of(1)] = 1.0;  // {p} joins a conflict
    PostulateVerdict v = check_blame(p.diagram, bad);
    CHECK_FALSE(v.passed);
    REQUIRE(v.counterexample.has_value());
    CHECK(v.counterexample->items == std::vector<std::string>{"p"});
  }

  SUBCASE("strictly inconsistent assumption promoted") {
    ABF abf = make_abf({f("!p")}, {f("p"), f("q")});
    Prepared q = prepare(abf);
    CHECK(check_falsity(q.diagram, q.ranking).passed);
    CHECK(check_falsity(q.diagram, q.ranking).note.empty());

    Ranking bad = q.ranking;
    bad.scores[q.diagram.node_of(1)] = 0.99;  // {p} above {q}
    PostulateVerdict v = check_falsity(q.diagram, bad);
    CHECK_FALSE(v.passed);
    REQUIRE(v.counterexample.has_value());
    CHECK(v.counterexample->items == std::vector<std::string>{"p", "q"});
  }

  SUBCASE("entailed assumption below its entailer") {
    ABF abf = make_abf({}, {f("p & q"), f("p"), f("!p")});
    Prepared q = prepare(abf);
    CHECK(check_dominance(q.diagram, q.ranking).passed);

    Ranking bad = q.ranking;
    bad.scores[q.diagram.node_of(2)] = 0.01;  // {p}, entailed by p & q
    CHECK_FALSE(check_dominance(q.diagram, bad).passed);
  }

  SUBCASE("consistent KB with a depressed node") {
    ABF abf = make_abf({}, {f("p"), f("q")});
    Prepared q = prepare(abf);
    PostulateVerdict ok = check_consistency(q.diagram, q.ranking);
    CHECK(ok.passed);
    CHECK(ok.applicable);

    Ranking bad = q.ranking;
    bad.scores[q.diagram.node_of(3)] = 0.5;
    CHECK_FALSE(check_consistency(q.diagram, bad).passed);
  }
}

TEST_CASE("counter-transitivity is the stronger graph check") {
  // whenever it accepts a ranking, monotony must accept it too
  std::mt19937_64 rng(99173);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 2 + rng() % 4;
    AbstractAF af;
    for (std::size_t i = 0; i < n; ++i) {
      af.labels.push_back("n" + std::to_string(i));
    }
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        if (rng() % 3 == 0) af.add_edge(a, b);
      }
    }
    af.finalize();

    Ranking r;
    r.semantics_id = "categoriser";
    for (std::size_t i = 0; i < n; ++i) {
      r.scores.push_back(static_cast<double>(rng() % 5) / 4.0);
    }

    CAPTURE(round);
    if (check_counter_transitivity(af, r).passed) {
      CHECK(check_monotony(af, r).passed);
    }
  }
}

TEST_CASE("generator: deterministic, valid, within bounds") {
  GeneratorParams params;
  params.seed = 1234;

  ABF first = random_abf(params, 5);
  ABF second = random_abf(params, 5);
  CHECK(abf_fingerprint(first) == abf_fingerprint(second));
  CHECK(first.ab.size() == second.ab.size());

  for (std::uint64_t index = 0; index < 40; ++index) {
    ABF abf = random_abf(params, index);
    CAPTURE(index);
    CHECK(abf.ab.size() >= 1);
    CHECK(abf.ab.size() <= params.ab_size);
    CHECK(abf.gamma.size() <= params.gamma_size);
    CHECK(is_consistent(abf.gamma));
    for (const Formula& g : abf.ab) CHECK_FALSE(abf.gamma.contains(g));
  }
}

TEST_CASE("generator: parameter ranges are enforced") {
  GeneratorParams params;
  params.max_atoms = 0;
  CHECK_THROWS_AS(random_abf(params, 0), std::invalid_argument);
  params = {};
  params.max_atoms = 5;
  CHECK_THROWS_AS(random_abf(params, 0), std::invalid_argument);
  params = {};
  params.ab_size = 6;
  CHECK_THROWS_AS(random_abf(params, 0), std::invalid_argument);
  params = {};
  params.gamma_size = 3;
  CHECK_THROWS_AS(random_abf(params, 0), std::invalid_argument);
  params = {};
  params.max_depth = 3;
  CHECK_THROWS_AS(random_abf(params, 0), std::invalid_argument);
}

TEST_CASE("fingerprint: gamma order free, assumption order fixed") {
  ABF a = make_abf({f("p"), f("q -> r")}, {f("s"), f("!s")});
  ABF b = make_abf({f("q -> r"), f("p")}, {f("s"), f("!s")});
  CHECK(abf_fingerprint(a) == abf_fingerprint(b));

  ABF c = make_abf({f("p"), f("q -> r")}, {f("!s"), f("s")});
  CHECK(abf_fingerprint(a) != abf_fingerprint(c));
}

TEST_CASE("suite: all green, reproducible, properly fingerprinted") {
  GeneratorParams params;
  params.seed = 31337;

  std::vector<PostulateVerdict> verdicts = run_suite(params, 25);
  CHECK(verdicts.size() == 250);

  for (const PostulateVerdict& v : verdicts) {
    CAPTURE(v.postulate_id);
    CAPTURE(v.instance_fingerprint);
    CHECK(v.passed);
    CHECK(v.instance_fingerprint.find("seed=31337;index=") == 0);
    CHECK(v.instance_fingerprint.find(";abf=") != std::string::npos);
  }

  std::vector<PostulateVerdict> again = run_suite(params, 25);
  REQUIRE(again.size() == verdicts.size());
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    CHECK(verdicts[i].postulate_id == again[i].postulate_id);
    CHECK(verdicts[i].passed == again[i].passed);
    CHECK(verdicts[i].applicable == again[i].applicable);
    CHECK(verdicts[i].instance_fingerprint == again[i].instance_fingerprint);
  }
}

TEST_CASE("suite: replaying a fingerprinted instance reproduces the KB") {
  GeneratorParams params;
  params.seed = 907;
  std::vector<PostulateVerdict> verdicts = run_suite(params, 3);
  REQUIRE(verdicts.size() == 30);

  // verdict 17 belongs to instance index 1
  const std::string& fp = verdicts[17].instance_fingerprint;
  CHECK(fp.find("seed=907;index=1;") == 0);
  ABF replay = random_abf(params, 1);
  CHECK(fp.find("abf=" + abf_fingerprint(replay)) != std::string::npos);
}

TEST_CASE("suite: rejects an empty run") {
  CHECK_THROWS_AS(run_suite({}, 0), std::invalid_argument);
}
