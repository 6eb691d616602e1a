#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "argrank/errors.hpp"
#include "argrank/ranking.hpp"

using namespace argrank;

namespace {

AbstractAF graph(std::size_t n,
                 std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  AbstractAF af;
  for (std::size_t i = 0; i < n; ++i) af.labels.push_back("n" + std::to_string(i));
  for (auto [a, b] : edges) af.add_edge(a, b);
  af.finalize();
  return af;
}

// exhaustive search for a score-respecting injection weaker -> stronger
bool injection_exists(const std::vector<std::uint32_t>& stronger,
                      const std::vector<std::uint32_t>& weaker,
                      const std::vector<double>& scores) {
  std::vector<char> used(stronger.size(), 0);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == weaker.size()) return true;
    for (std::size_t j = 0; j < stronger.size(); ++j) {
      if (used[j] || scores[stronger[j]] < scores[weaker[i]]) continue;
      used[j] = 1;
      if (place(i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  return place(0);
}

}  // namespace

TEST_CASE("self-attacker settles on the golden ratio") {
  AbstractAF af = graph(1, {{0, 0}});
  Ranking r = categoriser(af, 1e-12, 200);
  CHECK(std::fabs(r.scores[0] - 0.6180339887498949) < 1e-10);
  CHECK(r.iterations <= 60);
  CHECK(r.residuals.size() == r.iterations);
}

TEST_CASE("mutual attack is symmetric and also golden") {
  AbstractAF af = graph(2, {{0, 1}, {1, 0}});
  Ranking r = categoriser(af, 1e-12, 200);
  CHECK(r.scores[0] == r.scores[1]);
  CHECK(std::fabs(r.scores[0] - 0.6180339887498949) < 1e-10);
}

TEST_CASE("attack-free graph converges immediately at the top score") {
  AbstractAF af = graph(4, {});
  Ranking r = categoriser(af);
  CHECK(r.iterations == 1);
  REQUIRE(r.residuals.size() == 1);
  CHECK(r.residuals[0] == 0.0);
  for (double s : r.scores) CHECK(s == 1.0);
}

TEST_CASE("single edge gives exact halves") {
  AbstractAF af = graph(2, {{0, 1}});
  Ranking r = categoriser(af);
  CHECK(r.iterations == 2);
  CHECK(r.scores[0] == 1.0);
  CHECK(r.scores[1] == 0.5);
  CHECK(r.semantics_id == "categoriser");
}

TEST_CASE("iteration cap raises with the last sweep preserved") {
  AbstractAF af = graph(1, {{0, 0}});
  try {
    categoriser(af, 1e-15, 3);
    FAIL("expected throw");
  } catch (const NoConvergence& e) {
    CHECK(e.iterations == 3);
    REQUIRE(e.last_scores.size() == 1);
    // replay the same three sweeps
    double x = 1.0;
    for (int i = 0; i < 3; ++i) x = 1.0 / (1.0 + x);
    CHECK(e.last_scores[0] == x);
    CHECK(e.residual > 0.0);
  }
}

TEST_CASE("best score is known only for the categoriser") {
  CHECK(best_score("categoriser") == 1.0);
  try {
    best_score("grounded");
    FAIL("expected throw");
  } catch (const UnknownSemantics& e) {
    CHECK(e.semantics_id == "grounded");
  }
}

TEST_CASE("group comparison equals the injection criterion") {
  Ranking r;
  r.semantics_id = "categoriser";

  std::mt19937_64 rng(20240817);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 2 + rng() % 5;
    r.scores.assign(n, 0.0);
    for (double& s : r.scores) {
      s = static_cast<double>(rng() % 7) / 6.0;  // ties on purpose
    }

    auto draw_subset = [&]() {
      std::vector<std::uint32_t> out;
      for (std::uint32_t i = 0; i < n; ++i) {
        if (rng() % 2) out.push_back(i);
      }
      return out;
    };
    std::vector<std::uint32_t> a = draw_subset();
    std::vector<std::uint32_t> b = draw_subset();

    CAPTURE(round);
    CHECK(group_compare(a, b, r) == injection_exists(a, b, r.scores));
  }
}

TEST_CASE("group comparison edge cases") {
  Ranking r;
  r.scores = {0.9, 0.5, 0.5, 0.1};
  using idx = std::vector<std::uint32_t>;

  // empty weaker side: anything dominates it
  CHECK(group_compare(idx{}, idx{}, r));
  CHECK(group_compare(idx{3}, idx{}, r));
  // fewer members can never dominate more
  CHECK_FALSE(group_compare(idx{0}, idx{1, 2}, r));
  // ties count as domination
  CHECK(group_compare(idx{1, 2}, idx{2, 1}, r));
  CHECK(group_compare(idx{0, 1}, idx{1, 2}, r));
  CHECK_FALSE(group_compare(idx{1, 3}, idx{1, 2}, r));
}
