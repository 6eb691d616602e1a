#pragma once

#include <optional>
#include <string>
#include <vector>

#include "argrank/abf.hpp"
#include "argrank/rational.hpp"

namespace argrank {

// Per-assumption blame assignment. The first three measures are exact
// rationals; the ranking-induced one carries reals.
struct CulpabilityReport {
  std::string measure_id;              // "drastic", "share", "weighted", "induced"
  std::vector<Formula> formulas;       // abf.ab, in order
  bool exact = true;
  std::vector<Rational> exact_values;  // parallel to formulas when exact
  std::vector<double> real_values;     // parallel to formulas otherwise

  std::optional<Rational> exact_value_of(const Formula& f) const;
  std::optional<double> real_value_of(const Formula& f) const;
};

// 1 for assumptions inside some minimal inconsistent subset, else 0.
CulpabilityReport culp_drastic(const ABF& abf);

// Fraction of minimal inconsistent subsets containing the assumption.
// All zero when there are none.
CulpabilityReport culp_share(const ABF& abf);

// Sum of 1/|S| over minimal inconsistent subsets S containing the
// assumption, normalized by the total size of all such subsets.
CulpabilityReport culp_weighted(const ABF& abf);

// best_score minus the singleton's score in the chosen attack diagram.
CulpabilityReport induced_culpability(const ABF& abf, DiagramPolicy policy,
                                      double epsilon = 1e-6,
                                      std::size_t max_iter = 10000);

}  // namespace argrank
