#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace argrank {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Formula syntax error. `offset` is a byte position into the input,
// `expected` lists the token classes that would have been accepted there.
struct ParseError : Error {
  ParseError(std::size_t offset, std::vector<std::string> expected);

  std::size_t offset;
  std::vector<std::string> expected;
};

// A KB file line failed to parse (bad directive, bad formula, missing
// header line). `line` is 1-based.
struct KBParseError : Error {
  KBParseError(std::size_t line, const std::string& detail);

  std::size_t line;
};

// A KB file parsed but its contents are not usable (duplicate formulas,
// inconsistent strict part, ...). `line` is 1-based, 0 when the fault is
// not tied to a single line.
struct KBValidationError : Error {
  KBValidationError(std::size_t line, const std::string& detail);

  std::size_t line;
};

// Truth-table evaluation refuses inputs with too many distinct atoms.
struct AtomLimitExceeded : Error {
  AtomLimitExceeded(std::size_t atom_count, std::size_t limit);

  std::size_t atom_count;
  std::size_t limit;
};

// A combinatorial routine refuses inputs past its documented bound.
struct SizeLimitExceeded : Error {
  SizeLimitExceeded(const std::string& what_limit, std::size_t size,
                    std::size_t limit);

  std::size_t size;
  std::size_t limit;
};

enum class ValidationFault {
  StrictPremisesInconsistent,
  EmptyAssumptions,
  GammaAbOverlap,
};

// A knowledge base violates a structural precondition.
struct ValidationError : Error {
  explicit ValidationError(ValidationFault fault, const std::string& detail = "");

  ValidationFault fault;
};

// Fixed-point iteration hit max_iter before the residual dropped below
// epsilon. Carries the last iterate so callers can inspect it.
struct NoConvergence : Error {
  NoConvergence(std::vector<double> last_scores, double residual,
                std::size_t iterations);

  std::vector<double> last_scores;
  double residual;
  std::size_t iterations;
};

struct UnknownSemantics : Error {
  explicit UnknownSemantics(const std::string& semantics_id);

  std::string semantics_id;
};

// Random instance generation kept producing invalid KBs.
struct GenerationExhausted : Error {
  explicit GenerationExhausted(std::size_t rejections);

  std::size_t rejections;
};

}  // namespace argrank
