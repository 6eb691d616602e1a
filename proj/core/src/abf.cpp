#include "argrank/abf.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "argrank/errors.hpp"

namespace argrank {

// --- AbstractAF ------------------------------------------------------------

void AbstractAF::add_edge(std::uint32_t from, std::uint32_t to) {
  edges.emplace_back(from, to);
}

void AbstractAF::finalize() {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<std::vector<std::uint32_t>> AbstractAF::attacker_lists() const {
  std::vector<std::vector<std::uint32_t>> in(size());
  for (auto [from, to] : edges) in[to].push_back(from);
  for (auto& lst : in) std::sort(lst.begin(), lst.end());
  return in;
}

std::string AbstractAF::fingerprint() const {
  // FNV-1a over the serialized node and edge lists.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= p[i];
      h *= 1099511628211ull;
    }
  };
  for (const std::string& l : labels) {
    mix(l.data(), l.size());
    mix("\x1e", 1);
  }
  for (auto [from, to] : edges) {
    mix(&from, sizeof from);
    mix(&to, sizeof to);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

// --- ABF -------------------------------------------------------------------

ABF validate_abf(PremiseSet gamma, std::vector<Formula> ab) {
  std::vector<Formula> deduped;
  for (const Formula& f : ab) {
    if (std::find(deduped.begin(), deduped.end(), f) == deduped.end()) {
      deduped.push_back(f);
    }
  }
  if (deduped.empty()) {
    throw ValidationError(ValidationFault::EmptyAssumptions);
  }
  for (const Formula& f : deduped) {
    if (gamma.contains(f)) {
      throw ValidationError(ValidationFault::GammaAbOverlap, f.text());
    }
  }
  if (!is_consistent(gamma)) {
    throw ValidationError(ValidationFault::StrictPremisesInconsistent);
  }
  return ABF{std::move(gamma), std::move(deduped)};
}

std::vector<Formula> mask_formulas(const ABF& abf, AssumptionMask mask) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < abf.ab.size(); ++i) {
    if (mask & (AssumptionMask{1} << i)) out.push_back(abf.ab[i]);
  }
  return out;
}

bool attacks(const ABF& abf, AssumptionMask delta, AssumptionMask theta) {
  if (theta == 0) return false;
  PremiseSet premises = abf.gamma;
  for (const Formula& f : mask_formulas(abf, delta)) premises.insert(f);
  for (const Formula& f : mask_formulas(abf, theta)) {
    if (entails(premises, abf.contrary(f))) return true;
  }
  return false;
}

namespace {

AssumptionMask mask_of(const ABF& abf, std::span<const Formula> subset) {
  AssumptionMask mask = 0;
  for (const Formula& f : subset) {
    auto it = std::find(abf.ab.begin(), abf.ab.end(), f);
    if (it == abf.ab.end()) {
      throw std::invalid_argument("formula is not an assumption: " + f.text());
    }
    mask |= AssumptionMask{1} << (it - abf.ab.begin());
  }
  return mask;
}

}  // namespace

bool attacks(const ABF& abf, std::span<const Formula> delta,
             std::span<const Formula> theta) {
  return attacks(abf, mask_of(abf, delta), mask_of(abf, theta));
}

// --- Attack diagram --------------------------------------------------------

std::string subset_label(const ABF& abf, AssumptionMask mask) {
  std::vector<Formula> members = mask_formulas(abf, mask);
  std::sort(members.begin(), members.end());
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out += ",";
    out += members[i].text();
  }
  out += "}";
  return out;
}

std::size_t AttackDiagram::node_of(AssumptionMask mask) const {
  for (std::size_t i = 0; i < node_subsets.size(); ++i) {
    if (node_subsets[i] == mask) return i;
  }
  throw std::out_of_range("no diagram node for subset " + subset_label(abf, mask));
}

AttackDiagram build_attack_diagram(const ABF& abf, DiagramPolicy policy) {
  const std::size_t n = abf.ab.size();
  if (policy == DiagramPolicy::Powerset && n > max_powerset_assumptions) {
    throw SizeLimitExceeded("assumption set (powerset diagram)", n,
                            max_powerset_assumptions);
  }

  std::vector<AssumptionMask> subsets;
  const AssumptionMask full = n >= 32 ? ~AssumptionMask{0}
                                      : ((AssumptionMask{1} << n) - 1);
  if (policy == DiagramPolicy::Powerset) {
    for (AssumptionMask m = 0; m <= full; ++m) subsets.push_back(m);
  } else {
    std::set<AssumptionMask> chosen{0, full};
    for (std::size_t i = 0; i < n; ++i) chosen.insert(AssumptionMask{1} << i);
    subsets.assign(chosen.begin(), chosen.end());
  }
  std::sort(subsets.begin(), subsets.end(), [](AssumptionMask a, AssumptionMask b) {
    if (std::popcount(a) != std::popcount(b)) {
      return std::popcount(a) < std::popcount(b);
    }
    return a < b;
  });

  // derives[i] = assumptions whose negation follows from gamma + subsets[i].
  // The attack test then reduces to a mask intersection.
  std::vector<AssumptionMask> derives(subsets.size(), 0);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    PremiseSet premises = abf.gamma;
    for (const Formula& f : mask_formulas(abf, subsets[i])) premises.insert(f);
    for (std::size_t j = 0; j < n; ++j) {
      if (entails(premises, abf.contrary(abf.ab[j]))) {
        derives[i] |= AssumptionMask{1} << j;
      }
    }
  }

  AttackDiagram diagram;
  diagram.abf = abf;
  diagram.policy = policy;
  diagram.node_subsets = subsets;
  diagram.af.labels.reserve(subsets.size());
  for (AssumptionMask m : subsets) {
    diagram.af.labels.push_back(subset_label(abf, m));
  }
  for (std::uint32_t from = 0; from < subsets.size(); ++from) {
    if (derives[from] == 0) continue;
    for (std::uint32_t to = 0; to < subsets.size(); ++to) {
      if (derives[from] & subsets[to]) diagram.af.add_edge(from, to);
    }
  }
  diagram.af.finalize();
  return diagram;
}

}  // namespace argrank
