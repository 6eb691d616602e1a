#pragma once

#include <vector>

#include "argrank/abf.hpp"

namespace argrank {

inline constexpr std::size_t max_enumeration_assumptions = 16;

// Antichain of assumption subsets, canonically ordered by (size, mask).
// `ambient` is the assumption list the masks index into.
struct SubsetFamily {
  std::vector<Formula> ambient;
  std::vector<std::uint32_t> masks;

  // Materialized members, each sorted by formula_order.
  std::vector<std::vector<Formula>> members() const;

  bool empty() const { return masks.empty(); }
  std::size_t size() const { return masks.size(); }
};

// Minimal assumption subsets that are inconsistent together with the strict
// premises. Empty when gamma + ab is consistent.
SubsetFamily enumerate_mic(const ABF& abf);

// Maximal assumption subsets consistent with the strict premises.
SubsetFamily enumerate_mcs(const ABF& abf);

// Assumptions belonging to no minimal inconsistent subset, sorted by
// formula_order.
std::vector<Formula> free_formulas(const ABF& abf);

}  // namespace argrank
