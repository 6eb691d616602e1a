#include "argrank/postulates.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "argrank/errors.hpp"
#include "argrank/kb_analysis.hpp"

namespace argrank {

namespace {

PostulateVerdict base_verdict(std::string id, std::string fingerprint) {
  PostulateVerdict v;
  v.postulate_id = std::move(id);
  v.instance_fingerprint = std::move(fingerprint);
  return v;
}

void fail(PostulateVerdict& v, std::vector<std::string> items,
          std::vector<double> scores, std::string detail) {
  if (!v.passed) return;  // keep the first witness
  v.passed = false;
  v.counterexample = Counterexample{std::move(items), std::move(scores),
                                    std::move(detail)};
}

std::string fnv_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

// Bitmask over abf.ab of the assumptions outside every minimal inconsistent
// subset.
AssumptionMask free_mask_of(const ABF& abf) {
  SubsetFamily mic = enumerate_mic(abf);
  AssumptionMask blamed = 0;
  for (std::uint32_t mask : mic.masks) blamed |= mask;
  const AssumptionMask full = (AssumptionMask{1} << abf.ab.size()) - 1;
  return full & ~blamed;
}

PostulateVerdict check_free_subsets(const AttackDiagram& diagram,
                                    const Ranking& r, std::string id) {
  PostulateVerdict v = base_verdict(std::move(id), abf_fingerprint(diagram.abf));
  const AssumptionMask free_mask = free_mask_of(diagram.abf);
  for (std::size_t i = 0; i < diagram.node_subsets.size(); ++i) {
    if ((diagram.node_subsets[i] & ~free_mask) != 0) continue;
    for (std::size_t j = 0; j < diagram.node_subsets.size(); ++j) {
      if (diagram.node_subsets[j] == 0) continue;
      if (r.scores[i] < r.scores[j] - score_tolerance) {
        fail(v, {diagram.af.labels[i], diagram.af.labels[j]},
             {r.scores[i], r.scores[j]},
             "free subset " + diagram.af.labels[i] + " ranked below " +
                 diagram.af.labels[j]);
        return v;
      }
    }
  }
  return v;
}

}  // namespace

// --- Graph-level checks ----------------------------------------------------

PostulateVerdict check_void_precedence(const AbstractAF& af, const Ranking& r) {
  PostulateVerdict v = base_verdict("void-precedence", af.fingerprint());
  const auto attackers = af.attacker_lists();
  for (std::size_t b = 0; b < af.size(); ++b) {
    if (!attackers[b].empty()) continue;
    for (std::size_t a = 0; a < af.size(); ++a) {
      if (attackers[a].empty()) continue;
      if (!(r.scores[a] < r.scores[b] - score_tolerance)) {
        fail(v, {af.labels[a], af.labels[b]}, {r.scores[a], r.scores[b]},
             "attacked node " + af.labels[a] +
                 " not ranked strictly below unattacked " + af.labels[b]);
        return v;
      }
    }
  }
  return v;
}

PostulateVerdict check_monotony(const AbstractAF& af, const Ranking& r) {
  PostulateVerdict v = base_verdict("monotony", af.fingerprint());
  const auto attackers = af.attacker_lists();
  for (std::size_t a = 0; a < af.size(); ++a) {
    for (std::size_t b = 0; b < af.size(); ++b) {
      if (a == b) continue;
      bool subset = std::includes(attackers[b].begin(), attackers[b].end(),
                                  attackers[a].begin(), attackers[a].end());
      if (!subset) continue;
      if (r.scores[a] < r.scores[b] - score_tolerance) {
        fail(v, {af.labels[a], af.labels[b]}, {r.scores[a], r.scores[b]},
             af.labels[a] + " has a subset of " + af.labels[b] +
                 "'s attackers but ranks below it");
        return v;
      }
    }
  }
  return v;
}

PostulateVerdict check_counter_transitivity(const AbstractAF& af, const Ranking& r) {
  PostulateVerdict v = base_verdict("counter-transitivity", af.fingerprint());
  const auto attackers = af.attacker_lists();
  for (std::size_t a = 0; a < af.size(); ++a) {
    for (std::size_t b = 0; b < af.size(); ++b) {
      if (a == b) continue;
      if (!group_compare(attackers[b], attackers[a], r)) continue;
      if (r.scores[a] < r.scores[b] - score_tolerance) {
        fail(v, {af.labels[a], af.labels[b]}, {r.scores[a], r.scores[b]},
             af.labels[b] + "'s attackers group-dominate " + af.labels[a] +
                 "'s, yet " + af.labels[a] + " ranks below " + af.labels[b]);
        return v;
      }
    }
  }
  return v;
}

PostulateVerdict check_void_best_rank(const AbstractAF& af, const Ranking& r,
                                      double expected) {
  PostulateVerdict v = base_verdict("void-best-rank", af.fingerprint());
  const auto attackers = af.attacker_lists();
  for (std::size_t a = 0; a < af.size(); ++a) {
    if (!attackers[a].empty()) continue;
    if (std::abs(r.scores[a] - expected) > score_tolerance) {
      fail(v, {af.labels[a]}, {r.scores[a]},
           "unattacked node " + af.labels[a] + " does not score the best rank");
      return v;
    }
  }
  return v;
}

// --- KB-level checks -------------------------------------------------------

PostulateVerdict check_logical_void_precedence(const AttackDiagram& diagram,
                                               const Ranking& r) {
  return check_free_subsets(diagram, r, "logical-void-precedence");
}

PostulateVerdict check_freeness(const AttackDiagram& diagram, const Ranking& r) {
  return check_free_subsets(diagram, r, "freeness");
}

PostulateVerdict check_falsity(const AttackDiagram& diagram, const Ranking& r) {
  PostulateVerdict v = base_verdict("falsity", abf_fingerprint(diagram.abf));
  const ABF& abf = diagram.abf;
  bool any = false;
  for (std::size_t k = 0; k < abf.ab.size(); ++k) {
    if (is_consistent(abf.gamma.with(abf.ab[k]))) continue;
    any = true;
    const double bad = r.scores[diagram.node_of(AssumptionMask{1} << k)];
    for (std::size_t m = 0; m < abf.ab.size(); ++m) {
      const double other = r.scores[diagram.node_of(AssumptionMask{1} << m)];
      if (bad > other + score_tolerance) {
        fail(v, {abf.ab[k].text(), abf.ab[m].text()}, {bad, other},
             "strictly inconsistent assumption " + abf.ab[k].text() +
                 " outranks " + abf.ab[m].text());
        return v;
      }
    }
  }
  if (!any) v.note = "no assumption is inconsistent with the strict premises";
  return v;
}

PostulateVerdict check_dominance(const AttackDiagram& diagram, const Ranking& r) {
  PostulateVerdict v = base_verdict("dominance", abf_fingerprint(diagram.abf));
  const ABF& abf = diagram.abf;
  for (std::size_t k = 0; k < abf.ab.size(); ++k) {
    PremiseSet with_k = abf.gamma.with(abf.ab[k]);
    if (!is_consistent(with_k)) continue;
    for (std::size_t m = 0; m < abf.ab.size(); ++m) {
      if (m == k || !entails(with_k, abf.ab[m])) continue;
      const double stronger = r.scores[diagram.node_of(AssumptionMask{1} << k)];
      const double weaker = r.scores[diagram.node_of(AssumptionMask{1} << m)];
      if (weaker < stronger - score_tolerance) {
        fail(v, {abf.ab[m].text(), abf.ab[k].text()}, {weaker, stronger},
             abf.ab[k].text() + " consistently entails " + abf.ab[m].text() +
                 ", which nevertheless ranks below it");
        return v;
      }
    }
  }
  return v;
}

PostulateVerdict check_blame(const AttackDiagram& diagram, const Ranking& r) {
  PostulateVerdict v = base_verdict("blame", abf_fingerprint(diagram.abf));
  const ABF& abf = diagram.abf;
  const AssumptionMask free_mask = free_mask_of(abf);
  const double best = best_score(r.semantics_id);
  for (std::size_t k = 0; k < abf.ab.size(); ++k) {
    if (free_mask & (AssumptionMask{1} << k)) continue;
    const double score = r.scores[diagram.node_of(AssumptionMask{1} << k)];
    if (!(score < best - score_tolerance)) {
      fail(v, {abf.ab[k].text()}, {score},
           abf.ab[k].text() +
               " joins a minimal inconsistent subset but scores the best rank");
      return v;
    }
  }
  return v;
}

PostulateVerdict check_consistency(const AttackDiagram& diagram, const Ranking& r) {
  PostulateVerdict v = base_verdict("consistency", abf_fingerprint(diagram.abf));
  const ABF& abf = diagram.abf;
  PremiseSet everything = abf.gamma;
  for (const Formula& f : abf.ab) everything.insert(f);
  if (!is_consistent(everything)) {
    v.applicable = false;
    v.note = "strict premises plus assumptions are inconsistent; nothing to check";
    return v;
  }
  const double best = best_score(r.semantics_id);
  for (std::size_t i = 0; i < diagram.node_subsets.size(); ++i) {
    if (std::abs(r.scores[i] - best) > score_tolerance) {
      fail(v, {diagram.af.labels[i]}, {r.scores[i]},
           "consistent KB but " + diagram.af.labels[i] +
               " does not score the best rank");
      return v;
    }
  }
  return v;
}

// --- Random instances and the suite ----------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

void validate_params(const GeneratorParams& p) {
  if (p.max_atoms < 1 || p.max_atoms > 4 || p.ab_size < 1 || p.ab_size > 5 ||
      p.gamma_size > 2 || p.max_depth > 2) {
    throw std::invalid_argument("generator params out of range");
  }
}

// Draws are made with modulo on the raw stream, not with distribution
// objects, so streams are identical across standard libraries.
Formula draw_formula(std::mt19937_64& rng, const GeneratorParams& p,
                     std::size_t depth) {
  static const char* const names[4] = {"p", "q", "r", "s"};
  const std::uint64_t roll = rng() % 100;
  if (depth == 0 || roll < 40) {
    return Formula::atom(names[rng() % p.max_atoms]);
  }
  if (roll < 65) {
    return Formula::neg(draw_formula(rng, p, depth - 1));
  }
  const std::uint64_t op = rng() % 4;
  Formula lhs = draw_formula(rng, p, depth - 1);
  Formula rhs = draw_formula(rng, p, depth - 1);
  switch (op) {
    case 0: return Formula::conj(lhs, rhs);
    case 1: return Formula::disj(lhs, rhs);
    case 2: return Formula::implies(lhs, rhs);
    default: return Formula::iff(lhs, rhs);
  }
}

}  // namespace

ABF random_abf(const GeneratorParams& params, std::uint64_t index) {
  validate_params(params);
  std::mt19937_64 rng(splitmix64(params.seed ^ splitmix64(index)));
  constexpr std::size_t max_rejections = 1000;

  for (std::size_t rejection = 0; rejection < max_rejections; ++rejection) {
    const std::size_t want_ab = 1 + rng() % params.ab_size;
    const std::size_t want_gamma =
        params.gamma_size == 0 ? 0 : rng() % (params.gamma_size + 1);

    PremiseSet gamma;
    for (std::size_t i = 0; i < want_gamma; ++i) {
      for (int tries = 0; tries < 20; ++tries) {
        if (gamma.insert(draw_formula(rng, params, params.max_depth))) break;
      }
    }

    std::vector<Formula> ab;
    bool ok = true;
    for (std::size_t i = 0; i < want_ab && ok; ++i) {
      ok = false;
      for (int tries = 0; tries < 20; ++tries) {
        Formula f = draw_formula(rng, params, params.max_depth);
        if (gamma.contains(f) ||
            std::find(ab.begin(), ab.end(), f) != ab.end()) {
          continue;
        }
        ab.push_back(f);
        ok = true;
        break;
      }
    }
    if (!ok) continue;

    try {
      return validate_abf(std::move(gamma), std::move(ab));
    } catch (const ValidationError&) {
      continue;
    }
  }
  throw GenerationExhausted(max_rejections);
}

std::string abf_fingerprint(const ABF& abf) {
  std::string data = "g:";
  for (const std::string& t : abf.gamma.sorted_texts()) {
    data += t;
    data += '\x1e';
  }
  data += "a:";
  for (const Formula& f : abf.ab) {
    data += f.text();
    data += '\x1e';
  }
  return fnv_hex(data);
}

std::vector<PostulateVerdict> run_suite(const GeneratorParams& params,
                                        std::size_t count) {
  if (count == 0) throw std::invalid_argument("suite needs count >= 1");

  // Scores feed comparisons at tolerance 1e-9, so iterate well past it.
  constexpr double suite_epsilon = 1e-10;
  std::vector<PostulateVerdict> verdicts;

  for (std::size_t index = 0; index < count; ++index) {
    ABF abf = random_abf(params, index);
    const std::string fp = "seed=" + std::to_string(params.seed) +
                           ";index=" + std::to_string(index) +
                           ";abf=" + abf_fingerprint(abf);
    std::vector<PostulateVerdict> local;
    try {
      AttackDiagram diagram = build_attack_diagram(abf, DiagramPolicy::Powerset);
      Ranking r = categoriser(diagram.af, suite_epsilon, 10000);
      local.push_back(check_void_precedence(diagram.af, r));
      local.push_back(check_monotony(diagram.af, r));
      local.push_back(check_counter_transitivity(diagram.af, r));
      local.push_back(
          check_void_best_rank(diagram.af, r, best_score(r.semantics_id)));
      local.push_back(check_logical_void_precedence(diagram, r));
      local.push_back(check_falsity(diagram, r));
      local.push_back(check_freeness(diagram, r));
      local.push_back(check_dominance(diagram, r));
      local.push_back(check_blame(diagram, r));
      local.push_back(check_consistency(diagram, r));
    } catch (const Error& e) {
      PostulateVerdict v = base_verdict("instance-error", fp);
      v.passed = false;
      v.note = e.what();
      local.push_back(std::move(v));
    }
    for (PostulateVerdict& v : local) {
      v.instance_fingerprint = fp;
      verdicts.push_back(std::move(v));
    }
  }
  return verdicts;
}

}  // namespace argrank
