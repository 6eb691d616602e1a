#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "argrank/abf.hpp"
#include "argrank/culpability.hpp"
#include "argrank/dot.hpp"
#include "argrank/errors.hpp"
#include "argrank/kb_analysis.hpp"
#include "argrank/kb_file.hpp"
#include "argrank/postulates.hpp"
#include "argrank/ranking.hpp"
#include "argrank/sequent.hpp"

namespace argrank::cli {

namespace {

using nlohmann::json;

ABF load_abf(const std::string& path) {
  KBFile kb = load_kb_file(path);
  return validate_abf(std::move(kb.gamma), std::move(kb.ab));
}

double round6(double x) { return std::round(x * 1e6) / 1e6; }

std::string format6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return std::string(buf);
}

std::string subset_text(const std::vector<Formula>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out += ",";
    out += members[i].text();
  }
  return out + "}";
}

DiagramPolicy parse_policy(const std::string& name) {
  if (name == "powerset") return DiagramPolicy::Powerset;
  if (name == "singletons-top") return DiagramPolicy::SingletonsTop;
  throw std::invalid_argument("unknown policy: " + name);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file " + path);
  out << content;
}

json verdict_json(const PostulateVerdict& v) {
  json j;
  j["postulate"] = v.postulate_id;
  j["passed"] = v.passed;
  j["applicable"] = v.applicable;
  j["fingerprint"] = v.instance_fingerprint;
  j["note"] = v.note;
  if (v.counterexample) {
    json c;
    c["items"] = v.counterexample->items;
    json scores = json::array();
    for (double s : v.counterexample->scores) scores.push_back(round6(s));
    c["scores"] = scores;
    c["detail"] = v.counterexample->detail;
    j["counterexample"] = c;
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

int emit_verdicts(const std::vector<PostulateVerdict>& verdicts) {
  json arr = json::array();
  bool any_failed = false;
  for (const PostulateVerdict& v : verdicts) {
    arr.push_back(verdict_json(v));
    if (!v.passed) any_failed = true;
    if (!v.applicable) {
      std::cerr << "warning: " << v.postulate_id << " inapplicable";
      if (!v.note.empty()) std::cerr << ": " << v.note;
      std::cerr << "\n";
    }
  }
  std::cout << arr.dump(2) << "\n";
  return any_failed ? 3 : 0;
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& opts) {
  ABF abf = load_abf(opts.file);
  SubsetFamily mcs = enumerate_mcs(abf);
  SubsetFamily mic = enumerate_mic(abf);
  std::vector<Formula> free = free_formulas(abf);

  if (opts.format == "json") {
    json j;
    auto family_json = [](const SubsetFamily& fam) {
      json arr = json::array();
      for (const auto& member : fam.members()) {
        json sub = json::array();
        for (const Formula& f : member) sub.push_back(f.text());
        arr.push_back(sub);
      }
      return arr;
    };
    j["mcs"] = family_json(mcs);
    j["mic"] = family_json(mic);
    json fr = json::array();
    for (const Formula& f : free) fr.push_back(f.text());
    j["free"] = fr;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "MCS:\n";
  for (const auto& member : mcs.members()) {
    std::cout << "  " << subset_text(member) << "\n";
  }
  std::cout << "MIC:\n";
  for (const auto& member : mic.members()) {
    std::cout << "  " << subset_text(member) << "\n";
  }
  std::cout << "FREE:\n";
  for (const Formula& f : free) std::cout << "  " << f.text() << "\n";
  return 0;
}

int cmd_rank(const RankOptions& opts) {
  ABF abf = load_abf(opts.file);
  AttackDiagram diagram = build_attack_diagram(abf, parse_policy(opts.policy));
  Ranking ranking = categoriser(diagram.af, opts.eps, opts.max_iter);

  if (!opts.dot_path.empty()) write_file(opts.dot_path, to_dot(diagram.af));

  if (opts.format == "json") {
    json j;
    j["policy"] = opts.policy;
    json nodes = json::array();
    for (std::size_t i = 0; i < diagram.af.size(); ++i) {
      json n;
      n["id"] = i;
      json support = json::array();
      for (const Formula& f : mask_formulas(abf, diagram.node_subsets[i])) {
        support.push_back(f.text());
      }
      n["support"] = support;
      nodes.push_back(n);
    }
    j["nodes"] = nodes;
    json attacks = json::array();
    for (auto [from, to] : diagram.af.edges) {
      attacks.push_back(json::array({from, to}));
    }
    j["attacks"] = attacks;
    json scores;
    for (std::size_t i = 0; i < ranking.scores.size(); ++i) {
      scores[std::to_string(i)] = round6(ranking.scores[i]);
    }
    j["scores"] = scores;
    j["iterations"] = ranking.iterations;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::vector<std::size_t> order(diagram.af.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (ranking.scores[a] != ranking.scores[b]) {
      return ranking.scores[a] > ranking.scores[b];
    }
    return diagram.af.labels[a] < diagram.af.labels[b];
  });
  for (std::size_t i : order) {
    std::cout << format6(ranking.scores[i]) << "  " << diagram.af.labels[i] << "\n";
  }
  std::cout << "iterations: " << ranking.iterations << "\n";
  return 0;
}

int cmd_culp(const CulpOptions& opts) {
  ABF abf = load_abf(opts.file);

  std::string measure = opts.measure;
  if (measure == "d") measure = "drastic";
  if (measure == "star") measure = "share";
  if (measure == "c") measure = "weighted";

  CulpabilityReport report;
  if (measure == "drastic") {
    report = culp_drastic(abf);
  } else if (measure == "share") {
    report = culp_share(abf);
  } else if (measure == "weighted") {
    report = culp_weighted(abf);
  } else if (measure == "induced") {
    report = induced_culpability(abf, parse_policy(opts.policy), opts.eps,
                                 opts.max_iter);
  } else {
    throw std::invalid_argument("unknown measure: " + opts.measure);
  }

  if (opts.format == "json") {
    json j;
    j["measure"] = report.measure_id;
    json values;
    for (std::size_t i = 0; i < report.formulas.size(); ++i) {
      if (report.exact) {
        json r;
        r["num"] = report.exact_values[i].num;
        r["den"] = report.exact_values[i].den;
        values[report.formulas[i].text()] = r;
      } else {
        values[report.formulas[i].text()] = round6(report.real_values[i]);
      }
    }
    j["values"] = values;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  for (std::size_t i = 0; i < report.formulas.size(); ++i) {
    std::cout << report.formulas[i].text() << ": ";
    if (report.exact) {
      std::cout << report.exact_values[i].str();
    } else {
      std::cout << format6(report.real_values[i]);
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_check(const CheckOptions& opts) {
  std::vector<PostulateVerdict> verdicts;

  if (opts.random) {
    GeneratorParams params;
    params.seed = opts.seed;
    verdicts = run_suite(params, opts.count);
  } else {
    ABF abf = load_abf(opts.file);
    AttackDiagram diagram = build_attack_diagram(abf, DiagramPolicy::Powerset);
    Ranking r = categoriser(diagram.af, 1e-10, 10000);
    if (opts.corrupt_ranking) {
      // Push some attacked node to the top score; at least void precedence
      // must then fail. Intended for exercising the failure path.
      const auto attackers = diagram.af.attacker_lists();
      for (std::size_t i = 0; i < diagram.af.size(); ++i) {
        if (!attackers[i].empty()) {
          r.scores[i] = best_score(r.semantics_id);
          break;
        }
      }
    }
    verdicts.push_back(check_void_precedence(diagram.af, r));
    verdicts.push_back(check_monotony(diagram.af, r));
    verdicts.push_back(check_counter_transitivity(diagram.af, r));
    verdicts.push_back(check_void_best_rank(diagram.af, r, best_score(r.semantics_id)));
    verdicts.push_back(check_logical_void_precedence(diagram, r));
    verdicts.push_back(check_falsity(diagram, r));
    verdicts.push_back(check_freeness(diagram, r));
    verdicts.push_back(check_dominance(diagram, r));
    verdicts.push_back(check_blame(diagram, r));
    verdicts.push_back(check_consistency(diagram, r));
  }

  if (opts.postulate != "all") {
    std::erase_if(verdicts, [&](const PostulateVerdict& v) {
      return v.postulate_id != opts.postulate;
    });
  }
  return emit_verdicts(verdicts);
}

int cmd_sequent(const SequentOptions& opts) {
  KBFile kb = load_kb_file(opts.file);
  // Same structural checks as the subset diagrams.
  ABF abf = validate_abf(kb.gamma, kb.ab);

  std::vector<AttackRule> rules;
  {
    std::stringstream ss{opts.rules};
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      auto rule = attack_rule_from(item);
      if (!rule) throw std::invalid_argument("unknown attack rule: " + item);
      if (std::find(rules.begin(), rules.end(), *rule) == rules.end()) {
        rules.push_back(*rule);
      }
    }
    if (rules.empty()) throw std::invalid_argument("no attack rules given");
  }

  ArgumentFilters filters;
  {
    std::stringstream ss{opts.filters};
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item == "allow-inconsistent" || item == "all-supports") {
        continue;  // defaults
      }
      if (item == "consistent-only") {
        filters.consistent_only = true;
      } else if (item == "minimal-only") {
        filters.minimal_only = true;
      } else {
        throw std::invalid_argument("unknown filter: " + item);
      }
    }
  }

  if (opts.check) {
    std::vector<PostulateVerdict> verdicts = sequent_postulate_suite(
        abf.gamma, abf.ab, rules, opts.eps, opts.max_iter, filters);
    return emit_verdicts(verdicts);
  }

  SequentFramework fw = build_sequent_af(abf.gamma, abf.ab, rules, filters);
  if (!opts.dot_path.empty()) write_file(opts.dot_path, to_dot(fw.af));

  if (opts.format == "json") {
    json j;
    json rj = json::array();
    for (AttackRule r : rules) rj.push_back(attack_rule_name(r));
    j["rules"] = rj;
    json args = json::array();
    for (std::size_t i = 0; i < fw.arguments.size(); ++i) {
      json a;
      a["id"] = i;
      json support = json::array();
      for (const Formula& f : fw.arguments[i].support) support.push_back(f.text());
      a["support"] = support;
      a["conclusion"] = fw.arguments[i].conclusion.text();
      args.push_back(a);
    }
    j["arguments"] = args;
    json attacks = json::array();
    for (auto [from, to] : fw.af.edges) attacks.push_back(json::array({from, to}));
    j["attacks"] = attacks;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "arguments:\n";
  for (std::size_t i = 0; i < fw.arguments.size(); ++i) {
    std::cout << "  " << i << "  " << fw.arguments[i].label() << "\n";
  }
  std::cout << "attacks:\n";
  for (auto [from, to] : fw.af.edges) {
    std::cout << "  " << from << " -> " << to << "\n";
  }
  return 0;
}

}  // namespace argrank::cli
