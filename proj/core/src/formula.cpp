#include "argrank/formula.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

#include "argrank/errors.hpp"

namespace argrank {

struct Formula::Node {
  Connective kind;
  std::string name;              // Atom only
  std::vector<Formula> children; // Neg: 1, binary: 2
  std::string text;
};

namespace {

bool valid_atom_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

const char* infix_token(Connective kind) {
  switch (kind) {
    case Connective::And: return " & ";
    case Connective::Or: return " | ";
    case Connective::Imp: return " -> ";
    case Connective::Iff: return " <-> ";
    default: return nullptr;
  }
}

}  // namespace

Formula Formula::atom(std::string_view name) {
  if (!valid_atom_name(name)) {
    throw std::invalid_argument("bad atom name: '" + std::string(name) + "'");
  }
  auto node = std::make_shared<Node>();
  node->kind = Connective::Atom;
  node->name = std::string(name);
  node->text = node->name;
  return Formula(std::move(node));
}

Formula Formula::neg(const Formula& f) {
  auto node = std::make_shared<Node>();
  node->kind = Connective::Neg;
  node->children = {f};
  node->text = "!" + f.text();
  return Formula(std::move(node));
}

Formula Formula::conj(const Formula& lhs, const Formula& rhs) {
  return binary(Connective::And, lhs, rhs);
}
Formula Formula::disj(const Formula& lhs, const Formula& rhs) {
  return binary(Connective::Or, lhs, rhs);
}
Formula Formula::implies(const Formula& lhs, const Formula& rhs) {
  return binary(Connective::Imp, lhs, rhs);
}
Formula Formula::iff(const Formula& lhs, const Formula& rhs) {
  return binary(Connective::Iff, lhs, rhs);
}

Formula Formula::falsity() {
  static const Formula f = [] {
    auto node = std::make_shared<Node>();
    node->kind = Connective::Falsity;
    node->text = "F";
    return Formula(std::move(node));
  }();
  return f;
}

Formula Formula::truth() {
  static const Formula t = [] {
    auto node = std::make_shared<Node>();
    node->kind = Connective::Truth;
    node->text = "T";
    return Formula(std::move(node));
  }();
  return t;
}

Formula Formula::binary(Connective kind, const Formula& lhs, const Formula& rhs) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->children = {lhs, rhs};
  node->text = "(" + lhs.text() + infix_token(kind) + rhs.text() + ")";
  return Formula(std::move(node));
}

Connective Formula::kind() const { return node_->kind; }

std::size_t Formula::arity() const { return node_->children.size(); }

const Formula& Formula::child(std::size_t i) const { return node_->children.at(i); }

const std::string& Formula::atom_name() const {
  if (node_->kind != Connective::Atom) {
    throw std::logic_error("atom_name() on a non-atom formula");
  }
  return node_->name;
}

const std::string& Formula::text() const { return node_->text; }

std::strong_ordering Formula::operator<=>(const Formula& other) const {
  const std::string& a = text();
  const std::string& b = other.text();
  if (auto cmp = a.size() <=> b.size(); cmp != 0) return cmp;
  return a.compare(b) <=> 0;
}

std::strong_ordering formula_order(const Formula& lhs, const Formula& rhs) {
  return lhs <=> rhs;
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula cur = stack.back();
    stack.pop_back();
    if (cur.kind() == Connective::Atom) {
      out.insert(cur.atom_name());
    } else {
      for (std::size_t i = 0; i < cur.arity(); ++i) stack.push_back(cur.child(i));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { LParen, RParen, Bang, Amp, Pipe, Arrow, Darrow, Ident, False, True, End };

struct Token {
  Tok kind;
  std::string_view lexeme;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < input_.size() &&
           std::isspace(static_cast<unsigned char>(input_[pos_]))) {
      ++pos_;
    }
    std::size_t start = pos_;
    if (pos_ >= input_.size()) {
      current_ = {Tok::End, {}, start};
      return;
    }
    char c = input_[pos_];
    switch (c) {
      case '(': current_ = {Tok::LParen, input_.substr(start, 1), start}; ++pos_; return;
      case ')': current_ = {Tok::RParen, input_.substr(start, 1), start}; ++pos_; return;
      case '!': current_ = {Tok::Bang, input_.substr(start, 1), start}; ++pos_; return;
      case '&': current_ = {Tok::Amp, input_.substr(start, 1), start}; ++pos_; return;
      case '|': current_ = {Tok::Pipe, input_.substr(start, 1), start}; ++pos_; return;
      case '-':
        if (pos_ + 1 < input_.size() && input_[pos_ + 1] == '>') {
          current_ = {Tok::Arrow, input_.substr(start, 2), start};
          pos_ += 2;
          return;
        }
        throw ParseError(start, {"'->'"});
      case '<':
        if (pos_ + 2 < input_.size() && input_[pos_ + 1] == '-' && input_[pos_ + 2] == '>') {
          current_ = {Tok::Darrow, input_.substr(start, 3), start};
          pos_ += 3;
          return;
        }
        throw ParseError(start, {"'<->'"});
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < input_.size() &&
             (std::isalnum(static_cast<unsigned char>(input_[end])) || input_[end] == '_')) {
        ++end;
      }
      std::string_view word = input_.substr(start, end - start);
      pos_ = end;
      if (word == "F") {
        current_ = {Tok::False, word, start};
      } else if (word == "T") {
        current_ = {Tok::True, word, start};
      } else if (c >= 'a' && c <= 'z') {
        current_ = {Tok::Ident, word, start};
      } else {
        throw ParseError(start, {"an atom (lowercase first letter)", "'F'", "'T'"});
      }
      return;
    }
    throw ParseError(start, {"a formula token"});
  }

  std::string_view input_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  explicit Parser(std::string_view input) : lex_(input) {}

  Formula parse() {
    Formula f = parse_iff();
    if (lex_.peek().kind != Tok::End) {
      throw ParseError(lex_.peek().offset, {"end of input", "a binary connective"});
    }
    return f;
  }

 private:
  Formula parse_iff() {
    Formula lhs = parse_imp();
    if (lex_.peek().kind == Tok::Darrow) {
      lex_.take();
      return Formula::iff(lhs, parse_iff()); // right associative
    }
    return lhs;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      return Formula::implies(lhs, parse_imp()); // right associative
    }
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.take();
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Bang:
        lex_.take();
        return Formula::neg(parse_unary());
      case Tok::Ident: {
        Token id = lex_.take();
        return Formula::atom(id.lexeme);
      }
      case Tok::False:
        lex_.take();
        return Formula::falsity();
      case Tok::True:
        lex_.take();
        return Formula::truth();
      case Tok::LParen: {
        lex_.take();
        Formula inner = parse_iff();
        if (lex_.peek().kind != Tok::RParen) {
          throw ParseError(lex_.peek().offset, {"')'"});
        }
        lex_.take();
        return inner;
      }
      default:
        throw ParseError(t.offset, {"a formula"});
    }
  }

  Lexer lex_;
};

}  // namespace

Formula parse_formula(std::string_view input) { return Parser(input).parse(); }

}  // namespace argrank
