#include "argrank/sequent.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "argrank/errors.hpp"
#include "argrank/kb_analysis.hpp"

namespace argrank {

std::string SequentArgument::label() const {
  std::string out = "{";
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (i > 0) out += ",";
    out += support[i].text();
  }
  out += "} => ";
  out += conclusion.text();
  return out;
}

std::string attack_rule_name(AttackRule rule) {
  switch (rule) {
    case AttackRule::Def: return "def";
    case AttackRule::DirDef: return "dirdef";
    case AttackRule::Ucut: return "ucut";
    case AttackRule::CanUcut: return "canucut";
    case AttackRule::DirUcut: return "dirucut";
  }
  return "?";
}

std::optional<AttackRule> attack_rule_from(std::string_view name) {
  if (name == "def") return AttackRule::Def;
  if (name == "dirdef") return AttackRule::DirDef;
  if (name == "ucut") return AttackRule::Ucut;
  if (name == "canucut") return AttackRule::CanUcut;
  if (name == "dirucut") return AttackRule::DirUcut;
  return std::nullopt;
}

namespace {

void require_sequent_size(const std::vector<Formula>& ab) {
  if (ab.size() > max_sequent_assumptions) {
    throw SizeLimitExceeded("assumption set (sequent arguments)", ab.size(),
                            max_sequent_assumptions);
  }
}

std::vector<Formula> sorted_members(const std::vector<Formula>& ab,
                                    std::uint32_t mask) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < ab.size(); ++i) {
    if (mask & (std::uint32_t{1} << i)) out.push_back(ab[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Left fold of the formula_order-sorted members.
Formula conj_of(std::vector<Formula> members) {
  std::sort(members.begin(), members.end());
  Formula out = members.front();
  for (std::size_t i = 1; i < members.size(); ++i) {
    out = Formula::conj(out, members[i]);
  }
  return out;
}

}  // namespace

std::vector<Formula> canonical_pool(const PremiseSet& gamma,
                                    const std::vector<Formula>& ab) {
  require_sequent_size(ab);

  std::vector<Formula> candidates;
  candidates.push_back(Formula::neg(Formula::falsity()));
  for (const Formula& f : ab) {
    candidates.push_back(f);
    candidates.push_back(Formula::neg(f));
  }
  const std::uint32_t full = (std::uint32_t{1} << ab.size()) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    Formula conj = conj_of(sorted_members(ab, mask));
    candidates.push_back(conj);
    candidates.push_back(Formula::neg(conj));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  // Greedy partition into gamma-equivalence classes. Scanning in formula
  // order makes each class's first member its minimal one.
  std::vector<Formula> reps;
  for (const Formula& f : candidates) {
    bool placed = false;
    for (const Formula& rep : reps) {
      if (equiv_under(gamma, rep, f)) {
        placed = true;
        break;
      }
    }
    if (!placed) reps.push_back(f);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

std::vector<SequentArgument> build_arguments(const PremiseSet& gamma,
                                             const std::vector<Formula>& ab,
                                             ArgumentFilters filters) {
  require_sequent_size(ab);
  const std::vector<Formula> pool = canonical_pool(gamma, ab);
  const std::uint32_t full = (std::uint32_t{1} << ab.size()) - 1;

  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m <= full; ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) {
      return std::popcount(a) < std::popcount(b);
    }
    return a < b;
  });

  struct Raw {
    std::uint32_t mask;
    std::size_t pool_index;
  };
  std::vector<Raw> raw;
  for (std::uint32_t mask : masks) {
    PremiseSet premises = gamma;
    for (const Formula& f : sorted_members(ab, mask)) premises.insert(f);
    if (filters.consistent_only && !is_consistent(premises)) continue;
    for (std::size_t c = 0; c < pool.size(); ++c) {
      if (entails(premises, pool[c])) raw.push_back({mask, c});
    }
  }

  if (filters.minimal_only) {
    std::vector<Raw> kept;
    for (const Raw& a : raw) {
      bool minimal = std::none_of(raw.begin(), raw.end(), [&a](const Raw& b) {
        return b.pool_index == a.pool_index && b.mask != a.mask &&
               (b.mask & a.mask) == b.mask;
      });
      if (minimal) kept.push_back(a);
    }
    raw.swap(kept);
  }

  std::vector<SequentArgument> out;
  out.reserve(raw.size());
  for (const Raw& r : raw) {
    out.push_back(SequentArgument{sorted_members(ab, r.mask), pool[r.pool_index]});
  }
  return out;
}

bool rule_attacks(AttackRule rule, const SequentArgument& attacker,
                  const SequentArgument& attacked, const PremiseSet& gamma) {
  if (attacked.support.empty()) return false;
  const Formula& psi = attacker.conclusion;
  switch (rule) {
    case AttackRule::Def:
      return entails(gamma.with(psi), Formula::neg(conj_of(attacked.support)));
    case AttackRule::DirDef:
      return std::any_of(attacked.support.begin(), attacked.support.end(),
                         [&](const Formula& d) {
                           return entails(gamma.with(psi), Formula::neg(d));
                         });
    case AttackRule::Ucut: {
      const std::uint32_t full =
          (std::uint32_t{1} << attacked.support.size()) - 1;
      for (std::uint32_t part = 1; part <= full; ++part) {
        std::vector<Formula> sub;
        for (std::size_t i = 0; i < attacked.support.size(); ++i) {
          if (part & (std::uint32_t{1} << i)) sub.push_back(attacked.support[i]);
        }
        if (equiv_under(gamma, psi, Formula::neg(conj_of(std::move(sub))))) {
          return true;
        }
      }
      return false;
    }
    case AttackRule::CanUcut:
      return equiv_under(gamma, psi, Formula::neg(conj_of(attacked.support)));
    case AttackRule::DirUcut:
      return std::any_of(attacked.support.begin(), attacked.support.end(),
                         [&](const Formula& d) {
                           return equiv_under(gamma, psi, Formula::neg(d));
                         });
  }
  return false;
}

SequentFramework build_sequent_af(const PremiseSet& gamma,
                                  const std::vector<Formula>& ab,
                                  const std::vector<AttackRule>& rules,
                                  ArgumentFilters filters) {
  if (rules.empty()) {
    throw std::invalid_argument("attack rule set must be nonempty");
  }
  SequentFramework fw;
  fw.gamma = gamma;
  fw.ab = ab;
  fw.arguments = build_arguments(gamma, ab, filters);

  // The rules look only at (attacker conclusion, attacked support), so the
  // quadratic edge scan runs off a much smaller fire matrix.
  std::map<std::string, std::size_t> conc_index;
  std::vector<Formula> concs;
  for (const SequentArgument& a : fw.arguments) {
    if (conc_index.emplace(a.conclusion.text(), concs.size()).second) {
      concs.push_back(a.conclusion);
    }
  }
  std::map<std::string, std::size_t> support_index;
  std::vector<const SequentArgument*> support_rep;
  for (const SequentArgument& a : fw.arguments) {
    std::string key;
    for (const Formula& f : a.support) {
      key += f.text();
      key += '\x1e';
    }
    if (support_index.emplace(std::move(key), support_rep.size()).second) {
      support_rep.push_back(&a);
    }
  }

  std::vector<std::vector<char>> fires(
      concs.size(), std::vector<char>(support_rep.size(), 0));
  for (std::size_t c = 0; c < concs.size(); ++c) {
    SequentArgument attacker{{}, concs[c]};
    for (std::size_t s = 0; s < support_rep.size(); ++s) {
      for (AttackRule rule : rules) {
        if (rule_attacks(rule, attacker, *support_rep[s], gamma)) {
          fires[c][s] = 1;
          break;
        }
      }
    }
  }

  std::vector<std::size_t> arg_conc(fw.arguments.size());
  std::vector<std::size_t> arg_sup(fw.arguments.size());
  for (std::size_t i = 0; i < fw.arguments.size(); ++i) {
    arg_conc[i] = conc_index.at(fw.arguments[i].conclusion.text());
    std::string key;
    for (const Formula& f : fw.arguments[i].support) {
      key += f.text();
      key += '\x1e';
    }
    arg_sup[i] = support_index.at(key);
  }

  fw.af.labels.reserve(fw.arguments.size());
  for (const SequentArgument& a : fw.arguments) fw.af.labels.push_back(a.label());
  for (std::uint32_t from = 0; from < fw.arguments.size(); ++from) {
    for (std::uint32_t to = 0; to < fw.arguments.size(); ++to) {
      if (fires[arg_conc[from]][arg_sup[to]]) fw.af.add_edge(from, to);
    }
  }
  fw.af.finalize();
  return fw;
}

std::vector<PostulateVerdict> sequent_postulate_suite(
    const PremiseSet& gamma, const std::vector<Formula>& ab,
    const std::vector<AttackRule>& rules, double epsilon, std::size_t max_iter,
    ArgumentFilters filters) {
  SequentFramework fw = build_sequent_af(gamma, ab, rules, filters);
  Ranking r = categoriser(fw.af, epsilon, max_iter);
  const double best = best_score(r.semantics_id);

  ABF abf = validate_abf(gamma, ab);
  std::string fp = "kb=" + abf_fingerprint(abf) + ";rules=";
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (i > 0) fp += "+";
    fp += attack_rule_name(rules[i]);
  }

  std::vector<Formula> free = free_formulas(abf);
  auto is_free_support = [&free](const SequentArgument& a) {
    return std::all_of(a.support.begin(), a.support.end(), [&free](const Formula& f) {
      return std::find(free.begin(), free.end(), f) != free.end();
    });
  };

  std::vector<PostulateVerdict> verdicts;

  {
    PostulateVerdict v;
    v.postulate_id = "freeness";
    v.instance_fingerprint = fp;
    // The per-premise guarantee: an argument built on a single free premise
    // (or none) outranks every argument that leans on conflicting premises.
    // Wider supports are excluded on both sides. Each nonempty subset of a
    // support is a separate attack target, so a multi-premise support
    // accrues attackers in proportion to its subset count, and two free
    // premises can also trade places when one of them is already entailed
    // by the strict premises. Neither effect says anything about blame.
    for (std::size_t i = 0; i < fw.arguments.size() && v.passed; ++i) {
      if (fw.arguments[i].support.size() > 1) continue;
      if (!is_free_support(fw.arguments[i])) continue;
      for (std::size_t j = 0; j < fw.arguments.size(); ++j) {
        if (fw.arguments[j].support.empty()) continue;
        if (is_free_support(fw.arguments[j])) continue;
        if (r.scores[i] < r.scores[j] - score_tolerance) {
          v.passed = false;
          v.counterexample = Counterexample{
              {fw.arguments[i].label(), fw.arguments[j].label()},
              {r.scores[i], r.scores[j]},
              "free-premise argument ranked below one relying on "
              "conflicting premises"};
          break;
        }
      }
    }
    verdicts.push_back(std::move(v));
  }

  {
    PostulateVerdict v;
    v.postulate_id = "dominance";
    v.instance_fingerprint = fp;
    // Arguments grouped by singleton support.
    std::vector<std::vector<std::size_t>> by_singleton(ab.size());
    for (std::size_t i = 0; i < fw.arguments.size(); ++i) {
      if (fw.arguments[i].support.size() != 1) continue;
      for (std::size_t k = 0; k < ab.size(); ++k) {
        if (fw.arguments[i].support[0] == ab[k]) by_singleton[k].push_back(i);
      }
    }
    for (std::size_t k = 0; k < ab.size() && v.passed; ++k) {
      PremiseSet with_k = gamma.with(ab[k]);
      if (!is_consistent(with_k)) continue;
      for (std::size_t m = 0; m < ab.size() && v.passed; ++m) {
        if (m == k || !entails(with_k, ab[m])) continue;
        // gamma + ab[k] derives ab[m]: arguments on ab[m] rank at least
        // as high as arguments on ab[k].
        for (std::size_t i : by_singleton[m]) {
          for (std::size_t j : by_singleton[k]) {
            if (r.scores[i] < r.scores[j] - score_tolerance) {
              v.passed = false;
              v.counterexample = Counterexample{
                  {fw.arguments[i].label(), fw.arguments[j].label()},
                  {r.scores[i], r.scores[j]},
                  ab[k].text() + " consistently entails " + ab[m].text() +
                      " but its arguments rank higher"};
              break;
            }
          }
          if (!v.passed) break;
        }
      }
    }
    verdicts.push_back(std::move(v));
  }

  {
    PostulateVerdict v;
    v.postulate_id = "blame";
    v.instance_fingerprint = fp;
    std::vector<Formula> missing;
    for (std::size_t k = 0; k < ab.size() && v.passed; ++k) {
      if (std::find(free.begin(), free.end(), ab[k]) != free.end()) continue;
      bool found = false;
      for (std::size_t i = 0; i < fw.arguments.size(); ++i) {
        const SequentArgument& a = fw.arguments[i];
        if (a.support.size() != 1 || !(a.support[0] == ab[k])) continue;
        found = true;
        if (!(r.scores[i] < best - score_tolerance)) {
          v.passed = false;
          v.counterexample = Counterexample{
              {a.label()},
              {r.scores[i]},
              ab[k].text() + " joins a minimal inconsistent subset but its "
                             "argument scores the best rank"};
          break;
        }
      }
      if (!found) missing.push_back(ab[k]);
    }
    if (v.passed && !missing.empty()) {
      v.applicable = false;
      v.note = "no argument node exists for:";
      for (const Formula& f : missing) v.note += " " + f.text();
    }
    verdicts.push_back(std::move(v));
  }

  {
    PostulateVerdict v;
    v.postulate_id = "consistency";
    v.instance_fingerprint = fp;
    PremiseSet everything = gamma;
    for (const Formula& f : ab) everything.insert(f);
    if (!is_consistent(everything)) {
      v.applicable = false;
      v.note = "strict premises plus assumptions are inconsistent; nothing to check";
    } else {
      for (std::size_t i = 0; i < fw.arguments.size(); ++i) {
        if (std::abs(r.scores[i] - best) > score_tolerance) {
          v.passed = false;
          v.counterexample = Counterexample{
              {fw.arguments[i].label()},
              {r.scores[i]},
              "consistent KB but this argument misses the best rank"};
          break;
        }
      }
    }
    verdicts.push_back(std::move(v));
  }

  return verdicts;
}

}  // namespace argrank
