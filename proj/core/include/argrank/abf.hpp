#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "argrank/af.hpp"
#include "argrank/entailment.hpp"
#include "argrank/formula.hpp"

namespace argrank {

// Assumption-based framework: strict premises plus defeasible assumptions,
// with negation as the contrary. Build through validate_abf.
struct ABF {
  PremiseSet gamma;          // strict part, consistent
  std::vector<Formula> ab;   // assumptions, nonempty, disjoint from gamma

  Formula contrary(const Formula& f) const { return Formula::neg(f); }
};

// Checks the structural preconditions and returns the assembled framework.
// `ab` is deduplicated (first occurrence wins). Throws ValidationError with
// fault StrictPremisesInconsistent, EmptyAssumptions or GammaAbOverlap.
ABF validate_abf(PremiseSet gamma, std::vector<Formula> ab);

// Subsets of abf.ab are bitmasks over indices into abf.ab.
using AssumptionMask = std::uint32_t;

std::vector<Formula> mask_formulas(const ABF& abf, AssumptionMask mask);

// delta attacks theta iff gamma plus delta derives the negation of some
// member of theta. Nobody attacks the empty set.
bool attacks(const ABF& abf, AssumptionMask delta, AssumptionMask theta);
bool attacks(const ABF& abf, std::span<const Formula> delta,
             std::span<const Formula> theta);

enum class DiagramPolicy {
  Powerset,       // every subset of ab is a node
  SingletonsTop,  // the empty set, each singleton, and ab itself
};

inline constexpr std::size_t max_powerset_assumptions = 12;

// Attack graph over assumption subsets. Nodes are ordered by subset size,
// then by mask value; labels render the subsets ("{}", "{p,!q}").
struct AttackDiagram {
  AbstractAF af;
  std::vector<AssumptionMask> node_subsets;  // parallel to af nodes
  ABF abf;
  DiagramPolicy policy;

  // Index of the node carrying exactly this subset; throws std::out_of_range
  // if the policy did not materialize it.
  std::size_t node_of(AssumptionMask mask) const;
};

AttackDiagram build_attack_diagram(const ABF& abf, DiagramPolicy policy);

// Render of a subset of assumptions: member texts sorted by formula_order,
// comma separated, in braces.
std::string subset_label(const ABF& abf, AssumptionMask mask);

}  // namespace argrank
