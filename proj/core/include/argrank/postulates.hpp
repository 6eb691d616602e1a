#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "argrank/abf.hpp"
#include "argrank/af.hpp"
#include "argrank/ranking.hpp"

namespace argrank {

// Score comparisons in checkers ignore differences up to this. Strict
// inequalities must clear it; weak inequalities may miss by it.
inline constexpr double score_tolerance = 1e-9;

// Structured witness for a failed check: the offending nodes or formulas,
// their scores, and the relation that did not hold.
struct Counterexample {
  std::vector<std::string> items;
  std::vector<double> scores;
  std::string detail;
};

struct PostulateVerdict {
  std::string postulate_id;
  bool passed = true;
  // False when the check's premise is absent on this instance (for example
  // the consistency property on an inconsistent KB). Such verdicts count
  // as passed but carry a note.
  bool applicable = true;
  std::optional<Counterexample> counterexample;
  std::string instance_fingerprint;
  std::string note;
};

// Graph-level checks. `r` must have been computed on `af`.

// Attacked nodes rank strictly below unattacked ones.
PostulateVerdict check_void_precedence(const AbstractAF& af, const Ranking& r);
// Fewer attackers (set inclusion) never ranks worse.
PostulateVerdict check_monotony(const AbstractAF& af, const Ranking& r);
// If b's attackers group-dominate a's, then a ranks at least as high as b.
PostulateVerdict check_counter_transitivity(const AbstractAF& af, const Ranking& r);
// Every unattacked node scores exactly `expected`.
PostulateVerdict check_void_best_rank(const AbstractAF& af, const Ranking& r,
                                      double expected);

// KB-level checks; `r` must come from the diagram's graph, and the diagram
// should be the powerset one for the quantifiers to range fully.

// Subsets of the free assumptions rank at least as high as every nonempty subset.
PostulateVerdict check_logical_void_precedence(const AttackDiagram& diagram,
                                               const Ranking& r);
PostulateVerdict check_freeness(const AttackDiagram& diagram, const Ranking& r);
// An assumption inconsistent with the strict premises ranks no higher than
// any other assumption (singleton nodes).
PostulateVerdict check_falsity(const AttackDiagram& diagram, const Ranking& r);
// If one assumption consistently entails another, the entailed one's
// singleton ranks at least as high.
PostulateVerdict check_dominance(const AttackDiagram& diagram, const Ranking& r);
// Members of minimal inconsistent subsets rank strictly below the best score.
PostulateVerdict check_blame(const AttackDiagram& diagram, const Ranking& r);
// On a fully consistent KB every subset scores exactly the best score.
PostulateVerdict check_consistency(const AttackDiagram& diagram, const Ranking& r);

// Deterministic random instances for property testing.
struct GeneratorParams {
  std::uint64_t seed = 0;
  std::size_t max_atoms = 4;   // 1..4
  std::size_t ab_size = 5;     // upper bound, 1..5
  std::size_t gamma_size = 2;  // upper bound, 0..2
  std::size_t max_depth = 2;   // 0..2
};

// ABF number `index` of the stream determined by params.seed. Resamples
// until validate_abf accepts; throws GenerationExhausted after 1000
// consecutive rejections.
ABF random_abf(const GeneratorParams& params, std::uint64_t index);

// Generates `count` instances, builds the powerset diagram and categoriser
// ranking for each, and evaluates all ten checkers. Per-instance errors
// become failed "instance-error" verdicts; the suite continues.
std::vector<PostulateVerdict> run_suite(const GeneratorParams& params,
                                        std::size_t count);

// Stable content hash of a KB (strict premises + assumption list).
std::string abf_fingerprint(const ABF& abf);

}  // namespace argrank
