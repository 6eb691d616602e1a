#include <benchmark/benchmark.h>

#include "argrank/abf.hpp"
#include "argrank/kb_analysis.hpp"
#include "argrank/kb_file.hpp"
#include "argrank/postulates.hpp"
#include "argrank/ranking.hpp"
#include "argrank/sequent.hpp"

namespace {

using namespace argrank;

const char* const kb_small =
    "logic classical\n"
    "assume: p\n"
    "assume: !p\n"
    "assume: q\n";

ABF make_abf(const char* text) {
  KBFile kb = parse_kb_text(text);
  return validate_abf(std::move(kb.gamma), std::move(kb.ab));
}

// Chain of pairwise conflicts; assumption count scales the subset lattice.
ABF conflict_chain(int n) {
  std::string text = "logic classical\n";
  for (int i = 0; i < n; ++i) {
    std::string atom = "x" + std::to_string(i / 2);
    text += "assume: " + (i % 2 ? "!" + atom : atom) + "\n";
  }
  return make_abf(text.c_str());
}

void BM_powerset_diagram(benchmark::State& state) {
  ABF abf = conflict_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_attack_diagram(abf, DiagramPolicy::Powerset));
  }
}
BENCHMARK(BM_powerset_diagram)->Arg(4)->Arg(8)->Arg(10);

void BM_categoriser(benchmark::State& state) {
  ABF abf = conflict_chain(static_cast<int>(state.range(0)));
  AttackDiagram diagram = build_attack_diagram(abf, DiagramPolicy::Powerset);
  for (auto _ : state) {
    benchmark::DoNotOptimize(categoriser(diagram.af, 1e-6, 10000));
  }
}
BENCHMARK(BM_categoriser)->Arg(4)->Arg(8)->Arg(10);

void BM_mic_enumeration(benchmark::State& state) {
  ABF abf = conflict_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_mic(abf));
  }
}
BENCHMARK(BM_mic_enumeration)->Arg(8)->Arg(12)->Arg(16);

void BM_sequent_framework(benchmark::State& state) {
  ABF abf = conflict_chain(static_cast<int>(state.range(0)));
  std::vector<AttackRule> rules{AttackRule::Def, AttackRule::DirDef,
                                AttackRule::Ucut, AttackRule::CanUcut,
                                AttackRule::DirUcut};
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_sequent_af(abf.gamma, abf.ab, rules, {}));
  }
}
BENCHMARK(BM_sequent_framework)->Arg(3)->Arg(4)->Arg(5);

void BM_suite_instance(benchmark::State& state) {
  GeneratorParams params;
  params.seed = 42;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_suite(params, 5));
  }
}
BENCHMARK(BM_suite_instance);

void BM_singletons_rank(benchmark::State& state) {
  ABF abf = make_abf(kb_small);
  AttackDiagram diagram = build_attack_diagram(abf, DiagramPolicy::SingletonsTop);
  for (auto _ : state) {
    benchmark::DoNotOptimize(categoriser(diagram.af, 1e-6, 10000));
  }
}
BENCHMARK(BM_singletons_rank);

}  // namespace

BENCHMARK_MAIN();
