#include "argrank/kb_analysis.hpp"

#include <algorithm>
#include <bit>

#include "argrank/errors.hpp"

namespace argrank {

namespace {

void require_enumerable(const ABF& abf) {
  if (abf.ab.size() > max_enumeration_assumptions) {
    throw SizeLimitExceeded("assumption set (subset enumeration)", abf.ab.size(),
                            max_enumeration_assumptions);
  }
}

bool subset_consistent(const ABF& abf, std::uint32_t mask) {
  PremiseSet premises = abf.gamma;
  for (const Formula& f : mask_formulas(abf, mask)) premises.insert(f);
  return is_consistent(premises);
}

std::vector<std::uint32_t> masks_by_size(std::size_t n, bool ascending) {
  std::vector<std::uint32_t> masks(std::size_t{1} << n);
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(),
                   [ascending](std::uint32_t a, std::uint32_t b) {
                     int pa = std::popcount(a), pb = std::popcount(b);
                     if (pa != pb) return ascending ? pa < pb : pa > pb;
                     return a < b;
                   });
  return masks;
}

// Canonical family order: fewer members first, then lexicographic on the
// formula_order-sorted member lists.
void canonicalize(SubsetFamily& family) {
  auto key = [&family](std::uint32_t mask) {
    std::vector<Formula> member;
    for (std::size_t i = 0; i < family.ambient.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) member.push_back(family.ambient[i]);
    }
    std::sort(member.begin(), member.end());
    return member;
  };
  std::sort(family.masks.begin(), family.masks.end(),
            [&key](std::uint32_t a, std::uint32_t b) {
              if (std::popcount(a) != std::popcount(b)) {
                return std::popcount(a) < std::popcount(b);
              }
              return key(a) < key(b);
            });
}

}  // namespace

std::vector<std::vector<Formula>> SubsetFamily::members() const {
  std::vector<std::vector<Formula>> out;
  out.reserve(masks.size());
  for (std::uint32_t mask : masks) {
    std::vector<Formula> member;
    for (std::size_t i = 0; i < ambient.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) member.push_back(ambient[i]);
    }
    std::sort(member.begin(), member.end());
    out.push_back(std::move(member));
  }
  return out;
}

SubsetFamily enumerate_mic(const ABF& abf) {
  require_enumerable(abf);
  SubsetFamily family;
  family.ambient = abf.ab;
  // Ascending size: anything containing an already-found member is not minimal.
  for (std::uint32_t mask : masks_by_size(abf.ab.size(), true)) {
    bool covers_found = std::any_of(
        family.masks.begin(), family.masks.end(),
        [mask](std::uint32_t mic) { return (mic & mask) == mic; });
    if (covers_found) continue;
    if (!subset_consistent(abf, mask)) family.masks.push_back(mask);
  }
  canonicalize(family);
  return family;
}

SubsetFamily enumerate_mcs(const ABF& abf) {
  require_enumerable(abf);
  SubsetFamily family;
  family.ambient = abf.ab;
  // Descending size: anything inside an already-found member is not maximal.
  for (std::uint32_t mask : masks_by_size(abf.ab.size(), false)) {
    bool inside_found = std::any_of(
        family.masks.begin(), family.masks.end(),
        [mask](std::uint32_t mcs) { return (mask & mcs) == mask; });
    if (inside_found) continue;
    if (subset_consistent(abf, mask)) family.masks.push_back(mask);
  }
  canonicalize(family);
  return family;
}

std::vector<Formula> free_formulas(const ABF& abf) {
  SubsetFamily mic = enumerate_mic(abf);
  std::uint32_t blamed = 0;
  for (std::uint32_t mask : mic.masks) blamed |= mask;
  std::vector<Formula> out;
  for (std::size_t i = 0; i < abf.ab.size(); ++i) {
    if (!(blamed & (std::uint32_t{1} << i))) out.push_back(abf.ab[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace argrank
