#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argrank/af.hpp"
#include "argrank/entailment.hpp"
#include "argrank/formula.hpp"
#include "argrank/postulates.hpp"

namespace argrank {

inline constexpr std::size_t max_sequent_assumptions = 6;

// Argument ⟨support, conclusion⟩: the strict premises plus the support
// derive the conclusion. Conclusions are canonical pool representatives.
struct SequentArgument {
  std::vector<Formula> support;  // formula_order sorted subset of Ab
  Formula conclusion;

  std::string label() const;  // "{p,!q} => r"
};

enum class AttackRule { Def, DirDef, Ucut, CanUcut, DirUcut };

std::string attack_rule_name(AttackRule rule);  // "def", "dirdef", ...
std::optional<AttackRule> attack_rule_from(std::string_view name);

struct ArgumentFilters {
  bool consistent_only = false;  // drop arguments with strictly inconsistent support
  bool minimal_only = false;     // keep only inclusion-minimal supports per conclusion
};

// Finite conclusion pool: conjunctions of assumption subsets and their
// negations, the assumptions and their negations, and the negation of
// falsity. Every formula that can trigger one of the attack rules against
// a support drawn from ab is equivalent to a pool member, so restricting
// conclusions to the pool loses no attacks. The pool keeps one
// formula_order-minimal representative per equivalence class modulo gamma.
std::vector<Formula> canonical_pool(const PremiseSet& gamma,
                                    const std::vector<Formula>& ab);

// Every ⟨Δ, c⟩ with Δ ⊆ ab, c in the pool, and gamma ∪ Δ deriving c.
// ConsistentOnly is applied first, then MinimalOnly among the survivors.
std::vector<SequentArgument> build_arguments(const PremiseSet& gamma,
                                             const std::vector<Formula>& ab,
                                             ArgumentFilters filters = {});

// One Table-style attack condition. All rules compare the attacker's
// conclusion against the attacked support (never its conclusion), and all
// are false when the attacked support is empty:
//   Def     - gamma + conclusion derives the negated support conjunction
//   DirDef  - ... derives the negation of some support member
//   Ucut    - conclusion is gamma-equivalent to the negated conjunction of
//             some nonempty part of the support
//   CanUcut - ... of the whole support
//   DirUcut - ... of some single support member
// Conjunctions fold the formula_order-sorted members left to right.
bool rule_attacks(AttackRule rule, const SequentArgument& attacker,
                  const SequentArgument& attacked, const PremiseSet& gamma);

struct SequentFramework {
  AbstractAF af;
  std::vector<SequentArgument> arguments;  // parallel to af nodes
  PremiseSet gamma;
  std::vector<Formula> ab;
};

// Nodes are the built arguments; an edge runs a -> b when any of the given
// rules fires. `rules` must be nonempty.
SequentFramework build_sequent_af(const PremiseSet& gamma,
                                  const std::vector<Formula>& ab,
                                  const std::vector<AttackRule>& rules,
                                  ArgumentFilters filters = {});

// Categoriser ranking over the sequent framework, then the four KB-level
// properties (freeness, dominance, blame, consistency) quantified over
// argument nodes. Freeness compares arguments carrying at most one free
// premise against arguments whose support leans on conflicting premises;
// wider supports pick up attackers per support subset, so they carry no
// guarantee either way. Blame turns inapplicable for assumptions whose
// argument nodes were filtered away.
std::vector<PostulateVerdict> sequent_postulate_suite(
    const PremiseSet& gamma, const std::vector<Formula>& ab,
    const std::vector<AttackRule>& rules, double epsilon = 1e-10,
    std::size_t max_iter = 10000, ArgumentFilters filters = {});

}  // namespace argrank
