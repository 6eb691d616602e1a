#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "argrank/formula.hpp"

namespace argrank {

// Truth tables refuse formula sets with more distinct atoms than this.
inline constexpr std::size_t max_entailment_atoms = 20;

// Duplicate-free list of formulas. Keeps insertion order for display;
// set identity is structural (canonical text).
class PremiseSet {
 public:
  PremiseSet() = default;
  PremiseSet(std::initializer_list<Formula> items);

  // Returns false (and leaves the set unchanged) on a duplicate.
  bool insert(const Formula& f);
  bool contains(const Formula& f) const;

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Formula>& items() const { return items_; }

  PremiseSet with(const Formula& extra) const;
  PremiseSet union_with(const PremiseSet& other) const;

  // Canonical texts of the members, sorted bytewise. Stable identity for
  // memo keys and fingerprints.
  std::vector<std::string> sorted_texts() const;

 private:
  std::vector<Formula> items_;
};

// Classical propositional entailment by exhaustive valuation, 64 valuations
// per machine word. Results are memoized process-wide (thread safe).
// Throws AtomLimitExceeded past max_entailment_atoms.
bool entails(const PremiseSet& premises, const Formula& conclusion);

bool is_consistent(const PremiseSet& premises);

// lhs and rhs are interderivable under the given premises.
bool equiv_under(const PremiseSet& premises, const Formula& lhs, const Formula& rhs);

}  // namespace argrank
