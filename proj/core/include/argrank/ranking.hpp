#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "argrank/af.hpp"

namespace argrank {

// Scores for every node of one framework, plus the iteration trace that
// produced them. Higher score = better ranked.
struct Ranking {
  std::vector<double> scores;          // parallel to the framework's nodes
  std::string semantics_id;            // "categoriser"
  double epsilon = 0.0;
  std::size_t iterations = 0;
  std::vector<double> residuals;       // max-norm change per iteration
};

// Synchronous fixed-point iteration of
//   score(a) <- 1 / (1 + sum of current scores of a's attackers)
// from the all-ones start, stopping when the max-norm change drops below
// epsilon. Throws NoConvergence (carrying the last iterate) if max_iter
// sweeps are not enough. Unattacked nodes score exactly 1.
Ranking categoriser(const AbstractAF& af, double epsilon = 1e-6,
                    std::size_t max_iter = 10000);

// Best possible score under the named semantics. Throws UnknownSemantics.
double best_score(const std::string& semantics_id);

// True iff the nodes in `stronger` can absorb those in `weaker`: an
// injection from `weaker` into `stronger` mapping each node to one scoring
// at least as high. Decided by sorting both score lists descending and
// comparing positionwise; comparisons are exact.
bool group_compare(std::span<const std::uint32_t> stronger,
                   std::span<const std::uint32_t> weaker, const Ranking& r);

}  // namespace argrank
