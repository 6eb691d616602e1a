#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "argrank/entailment.hpp"
#include "argrank/formula.hpp"

namespace argrank {

// Parsed knowledge-base file:
//
//   # comment
//   logic classical
//   strict: p -> q
//   assume: p
//   assume: !q
//
// One directive per line; blank lines and '#' comments ignored; the logic
// line must come first and be "logic classical". CRLF accepted.
struct KBFile {
  PremiseSet gamma;
  std::vector<Formula> ab;
};

// Throws KBParseError for malformed lines or formulas (with line number),
// KBValidationError for duplicate formulas or a missing assume line.
KBFile parse_kb_text(std::string_view text);
KBFile parse_kb_stream(std::istream& in);
KBFile load_kb_file(const std::string& path);  // KBParseError if unreadable

}  // namespace argrank
