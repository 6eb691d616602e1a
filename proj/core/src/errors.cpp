#include "argrank/errors.hpp"

#include <sstream>

namespace argrank {

namespace {

std::string parse_error_message(std::size_t offset,
                                const std::vector<std::string>& expected) {
  std::ostringstream out;
  out << "syntax error at byte " << offset;
  if (!expected.empty()) {
    out << ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) out << (i + 1 == expected.size() ? " or " : ", ");
      out << expected[i];
    }
  }
  return out.str();
}

std::string line_message(const char* what, std::size_t line,
                         const std::string& detail) {
  std::ostringstream out;
  out << what;
  if (line > 0) out << " at line " << line;
  out << ": " << detail;
  return out.str();
}

const char* fault_name(ValidationFault fault) {
  switch (fault) {
    case ValidationFault::StrictPremisesInconsistent:
      return "strict premises are inconsistent";
    case ValidationFault::EmptyAssumptions:
      return "assumption set is empty";
    case ValidationFault::GammaAbOverlap:
      return "strict premises and assumptions overlap";
  }
  return "invalid knowledge base";
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected)
    : Error(parse_error_message(offset, expected)),
      offset(offset),
      expected(std::move(expected)) {}

KBParseError::KBParseError(std::size_t line, const std::string& detail)
    : Error(line_message("kb parse error", line, detail)), line(line) {}

KBValidationError::KBValidationError(std::size_t line, const std::string& detail)
    : Error(line_message("kb validation error", line, detail)), line(line) {}

AtomLimitExceeded::AtomLimitExceeded(std::size_t atom_count, std::size_t limit)
    : Error("formula set mentions " + std::to_string(atom_count) +
            " atoms, limit is " + std::to_string(limit)),
      atom_count(atom_count),
      limit(limit) {}

SizeLimitExceeded::SizeLimitExceeded(const std::string& what_limit,
                                     std::size_t size, std::size_t limit)
    : Error(what_limit + " has size " + std::to_string(size) + ", limit is " +
            std::to_string(limit)),
      size(size),
      limit(limit) {}

ValidationError::ValidationError(ValidationFault fault, const std::string& detail)
    : Error(detail.empty() ? std::string(fault_name(fault))
                           : std::string(fault_name(fault)) + ": " + detail),
      fault(fault) {}

NoConvergence::NoConvergence(std::vector<double> last_scores, double residual,
                             std::size_t iterations)
    : Error("fixed-point iteration did not converge after " +
            std::to_string(iterations) +
            " iterations, residual " + std::to_string(residual)),
      last_scores(std::move(last_scores)),
      residual(residual),
      iterations(iterations) {}

UnknownSemantics::UnknownSemantics(const std::string& semantics_id)
    : Error("unknown ranking semantics: " + semantics_id),
      semantics_id(semantics_id) {}

GenerationExhausted::GenerationExhausted(std::size_t rejections)
    : Error("random KB generation rejected " + std::to_string(rejections) +
            " candidates in a row"),
      rejections(rejections) {}

}  // namespace argrank
