#include <doctest.h>

#include "argrank/errors.hpp"
#include "argrank/kb_file.hpp"

using namespace argrank;

TEST_CASE("kb file: directives, comments, blank lines, CRLF") {
  KBFile kb = parse_kb_text(
      "# tire scenario\r\n"
      "logic classical\r\n"
      "\r\n"
      "strict: p -> q\r\n"
      "assume: p\r\n"
      "  assume: !q   \r\n");
  CHECK(kb.gamma.size() == 1);
  CHECK(kb.gamma.items()[0].text() == "(p -> q)");
  REQUIRE(kb.ab.size() == 2);
  CHECK(kb.ab[0].text() == "p");
  CHECK(kb.ab[1].text() == "!q");
}

TEST_CASE("kb file: logic line must come first and appear once") {
  CHECK_THROWS_AS(parse_kb_text("assume: p\n"), KBParseError);
  CHECK_THROWS_AS(parse_kb_text("logic modal\nassume: p\n"), KBParseError);
  CHECK_THROWS_AS(parse_kb_text("logic classical\nlogic classical\nassume: p\n"),
                  KBParseError);
  CHECK_THROWS_AS(parse_kb_text(""), KBParseError);
  try {
    parse_kb_text("logic classical\nwibble: p\n");
    FAIL("expected throw");
  } catch (const KBParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("kb file: formula errors carry the line number") {
  try {
    parse_kb_text("logic classical\nassume: p\nassume: q &\n");
    FAIL("expected throw");
  } catch (const KBParseError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("kb file: duplicates are validation errors with line numbers") {
  try {
    parse_kb_text("logic classical\nassume: p\nassume:  p\n");
    FAIL("expected throw");
  } catch (const KBValidationError& e) {
    CHECK(e.line == 3);
  }
  try {
    parse_kb_text("logic classical\nstrict: p & q\nstrict: p&q\nassume: r\n");
    FAIL("expected throw");
  } catch (const KBValidationError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("kb file: at least one assumption") {
  CHECK_THROWS_AS(parse_kb_text("logic classical\nstrict: p\n"),
                  KBValidationError);
}

TEST_CASE("kb file: same formula may appear as strict and assumed at parse level") {
  // The overlap is caught later by validate_abf, not the file parser.
  KBFile kb = parse_kb_text("logic classical\nstrict: p\nassume: p\n");
  CHECK(kb.gamma.size() == 1);
  CHECK(kb.ab.size() == 1);
}
