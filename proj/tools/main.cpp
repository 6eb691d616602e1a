#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "argrank/errors.hpp"
#include "commands.hpp"

// Exit codes: 0 ok, 1 usage or parse error, 2 KB validation error,
// 3 postulate violation, 4 no convergence.
int main(int argc, char** argv) {
  CLI::App app{"ranking-based argumentation and culpability toolkit"};
  app.require_subcommand(1);

  argrank::cli::AnalyzeOptions analyze_opts;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "consistency structure of a KB (MCS / MIC / FREE)");
  analyze->add_option("file", analyze_opts.file, "KB file")->required();
  analyze->add_option("--format", analyze_opts.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  argrank::cli::RankOptions rank_opts;
  CLI::App* rank = app.add_subcommand(
      "rank", "categoriser scores over an assumption-subset attack graph");
  rank->add_option("file", rank_opts.file, "KB file")->required();
  rank->add_option("--policy", rank_opts.policy, "node policy")
      ->check(CLI::IsMember({"powerset", "singletons-top"}));
  rank->add_option("--eps", rank_opts.eps, "convergence threshold");
  rank->add_option("--max-iter", rank_opts.max_iter, "iteration cap");
  rank->add_option("--format", rank_opts.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  rank->add_option("--dot", rank_opts.dot_path, "write the graph as DOT to PATH");

  argrank::cli::CulpOptions culp_opts;
  CLI::App* culp = app.add_subcommand("culp", "per-assumption culpability values");
  culp->add_option("file", culp_opts.file, "KB file")->required();
  culp->add_option("--measure", culp_opts.measure,
                   "drastic | share | weighted | induced (short: d, star, c)")
      ->check(CLI::IsMember(
          {"drastic", "share", "weighted", "induced", "d", "star", "c"}));
  culp->add_option("--policy", culp_opts.policy, "diagram policy for induced")
      ->check(CLI::IsMember({"powerset", "singletons-top"}));
  culp->add_option("--eps", culp_opts.eps, "convergence threshold (induced)");
  culp->add_option("--max-iter", culp_opts.max_iter, "iteration cap (induced)");
  culp->add_option("--format", culp_opts.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  argrank::cli::CheckOptions check_opts;
  CLI::App* check = app.add_subcommand("check", "postulate checks (JSON verdicts)");
  check->add_option("file", check_opts.file, "KB file");
  check->add_flag("--random", check_opts.random, "generate seeded random KBs instead");
  check->add_option("--seed", check_opts.seed, "generator seed");
  check->add_option("--count", check_opts.count, "number of random instances");
  check->add_option("--postulate", check_opts.postulate, "restrict to one postulate")
      ->check(CLI::IsMember({"all", "void-precedence", "monotony",
                             "counter-transitivity", "void-best-rank",
                             "logical-void-precedence", "falsity", "freeness",
                             "dominance", "blame", "consistency"}));
  check->add_flag("--corrupt-ranking", check_opts.corrupt_ranking,
                  "spoil one score before checking (failure-path testing)")
      ->group("");

  argrank::cli::SequentOptions sequent_opts;
  CLI::App* sequent = app.add_subcommand(
      "sequent", "conclusion-support argument framework and its checks");
  sequent->add_option("file", sequent_opts.file, "KB file")->required();
  sequent->add_option("--rules", sequent_opts.rules,
                      "comma list of def,dirdef,ucut,canucut,dirucut");
  sequent->add_option("--filters", sequent_opts.filters,
                      "comma list of allow-inconsistent,consistent-only,"
                      "all-supports,minimal-only");
  sequent->add_option("--dot", sequent_opts.dot_path, "write the graph as DOT to PATH");
  sequent->add_flag("--check", sequent_opts.check, "run the property checks");
  sequent->add_option("--eps", sequent_opts.eps, "convergence threshold (--check)");
  sequent->add_option("--max-iter", sequent_opts.max_iter, "iteration cap (--check)");
  sequent->add_option("--format", sequent_opts.format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (check->parsed() && !check_opts.random && check_opts.file.empty()) {
      std::cerr << "error: check needs a KB file or --random\n";
      return 1;
    }
    if (analyze->parsed()) return argrank::cli::cmd_analyze(analyze_opts);
    if (rank->parsed()) return argrank::cli::cmd_rank(rank_opts);
    if (culp->parsed()) return argrank::cli::cmd_culp(culp_opts);
    if (check->parsed()) return argrank::cli::cmd_check(check_opts);
    if (sequent->parsed()) return argrank::cli::cmd_sequent(sequent_opts);
    return 1;
  } catch (const argrank::KBParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const argrank::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const argrank::KBValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const argrank::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const argrank::SizeLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const argrank::AtomLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const argrank::NoConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
