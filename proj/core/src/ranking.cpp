#include "argrank/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "argrank/errors.hpp"

namespace argrank {

Ranking categoriser(const AbstractAF& af, double epsilon, std::size_t max_iter) {
  const std::size_t n = af.size();
  const auto attackers = af.attacker_lists();

  std::vector<double> current(n, 1.0);
  std::vector<double> next(n);
  Ranking out;
  out.semantics_id = "categoriser";
  out.epsilon = epsilon;

  for (std::size_t iter = 1; iter <= max_iter; ++iter) {
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::uint32_t a : attackers[i]) sum += current[a];
      next[i] = 1.0 / (1.0 + sum);
      residual = std::max(residual, std::fabs(next[i] - current[i]));
    }
    current.swap(next);
    out.residuals.push_back(residual);
    out.iterations = iter;
    if (residual < epsilon) {
      out.scores = std::move(current);
      return out;
    }
  }
  throw NoConvergence(std::move(current),
                      out.residuals.empty() ? 0.0 : out.residuals.back(),
                      max_iter);
}

double best_score(const std::string& semantics_id) {
  if (semantics_id == "categoriser") return 1.0;
  throw UnknownSemantics(semantics_id);
}

bool group_compare(std::span<const std::uint32_t> stronger,
                   std::span<const std::uint32_t> weaker, const Ranking& r) {
  if (stronger.size() < weaker.size()) return false;
  std::vector<double> s, w;
  s.reserve(stronger.size());
  w.reserve(weaker.size());
  for (std::uint32_t i : stronger) s.push_back(r.scores.at(i));
  for (std::uint32_t i : weaker) w.push_back(r.scores.at(i));
  std::sort(s.begin(), s.end(), std::greater<>());
  std::sort(w.begin(), w.end(), std::greater<>());
  // Positionwise domination of sorted lists is equivalent to the existence
  // of a score-respecting injection.
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (s[i] < w[i]) return false;
  }
  return true;
}

}  // namespace argrank
