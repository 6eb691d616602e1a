#include "argrank/kb_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>

#include "argrank/errors.hpp"

namespace argrank {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

Formula parse_line_formula(std::string_view text, std::size_t line) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    throw KBParseError(line, std::string("bad formula: ") + e.what());
  }
}

}  // namespace

KBFile parse_kb_text(std::string_view text) {
  KBFile kb;
  bool saw_logic = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    if (!saw_logic) {
      if (line != "logic classical") {
        throw KBParseError(line_no,
                           "first directive must be exactly 'logic classical'");
      }
      saw_logic = true;
      continue;
    }
    if (line == "logic classical") {
      throw KBParseError(line_no, "duplicate logic line");
    }
    if (line.starts_with("strict:")) {
      Formula f = parse_line_formula(trim(line.substr(7)), line_no);
      if (!kb.gamma.insert(f)) {
        throw KBValidationError(line_no, "duplicate strict formula " + f.text());
      }
      continue;
    }
    if (line.starts_with("assume:")) {
      Formula f = parse_line_formula(trim(line.substr(7)), line_no);
      if (std::find(kb.ab.begin(), kb.ab.end(), f) != kb.ab.end()) {
        throw KBValidationError(line_no, "duplicate assume formula " + f.text());
      }
      kb.ab.push_back(f);
      continue;
    }
    throw KBParseError(line_no, "unrecognized directive");
  }

  if (!saw_logic) throw KBParseError(line_no, "missing 'logic classical' line");
  if (kb.ab.empty()) {
    throw KBValidationError(0, "no assume lines; at least one is required");
  }
  return kb;
}

KBFile parse_kb_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_kb_text(buffer.str());
}

KBFile load_kb_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw KBParseError(0, "cannot read file " + path);
  return parse_kb_stream(in);
}

}  // namespace argrank
