#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace argrank::cli {

struct AnalyzeOptions {
  std::string file;
  std::string format = "table";
};

struct RankOptions {
  std::string file;
  std::string policy = "powerset";
  double eps = 1e-6;
  std::size_t max_iter = 10000;
  std::string format = "table";
  std::string dot_path;
};

struct CulpOptions {
  std::string file;
  std::string measure = "weighted";
  std::string policy = "powerset";
  double eps = 1e-6;
  std::size_t max_iter = 10000;
  std::string format = "table";
};

struct CheckOptions {
  std::string file;
  bool random = false;
  std::uint64_t seed = 0;
  std::size_t count = 100;
  std::string postulate = "all";
  bool corrupt_ranking = false;  // test hook: spoil one score before checking
};

struct SequentOptions {
  std::string file;
  std::string rules = "def,dirdef,ucut,canucut,dirucut";
  std::string filters;
  std::string dot_path;
  bool check = false;
  double eps = 1e-10;
  std::size_t max_iter = 10000;
  std::string format = "table";
};

int cmd_analyze(const AnalyzeOptions& opts);
int cmd_rank(const RankOptions& opts);
int cmd_culp(const CulpOptions& opts);
int cmd_check(const CheckOptions& opts);
int cmd_sequent(const SequentOptions& opts);

}  // namespace argrank::cli
