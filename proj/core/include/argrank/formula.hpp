#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace argrank {

enum class Connective { Atom, Neg, And, Or, Imp, Iff, Falsity, Truth };

// Immutable propositional formula over ASCII atoms. Nodes are shared and
// never mutated; the canonical text rendering is computed once at
// construction and serves as equality key, order key and hash key.
//
// Canonical text: binary connectives fully parenthesized ("(p & !q)"),
// negation prefixed without parens of its own ("!p", "!(p | q)"),
// constants "F" and "T". Distinct formulas always render distinctly.
class Formula {
 public:
  static Formula atom(std::string_view name);
  static Formula neg(const Formula& f);
  static Formula conj(const Formula& lhs, const Formula& rhs);
  static Formula disj(const Formula& lhs, const Formula& rhs);
  static Formula implies(const Formula& lhs, const Formula& rhs);
  static Formula iff(const Formula& lhs, const Formula& rhs);
  static Formula falsity();
  static Formula truth();

  Connective kind() const;
  std::size_t arity() const;                 // 0, 1 or 2
  const Formula& child(std::size_t i) const; // i < arity()
  const std::string& atom_name() const;      // Atom nodes only

  // Canonical rendering; see class comment.
  const std::string& text() const;

  bool operator==(const Formula& other) const { return text() == other.text(); }

  // Total order: shorter canonical text first, ties broken bytewise.
  std::strong_ordering operator<=>(const Formula& other) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula binary(Connective kind, const Formula& lhs, const Formula& rhs);
  std::shared_ptr<const Node> node_;
};

// Named alias for the total order used throughout: (text length, text bytes).
std::strong_ordering formula_order(const Formula& lhs, const Formula& rhs);

// Parses the ASCII grammar:
//   iff := imp ("<->" iff)?          right associative
//   imp := or ("->" imp)?            right associative
//   or  := and ("|" and)*            left associative
//   and := unary ("&" unary)*        left associative
//   unary := "!" unary | atom | "F" | "T" | "(" iff ")"
// Atoms match [a-z][A-Za-z0-9_]*. Throws ParseError with a byte offset
// and the set of acceptable tokens.
Formula parse_formula(std::string_view input);

inline std::string render(const Formula& f) { return f.text(); }

// Distinct atom names occurring in f, sorted.
std::set<std::string> atoms(const Formula& f);

}  // namespace argrank

template <>
struct std::hash<argrank::Formula> {
  std::size_t operator()(const argrank::Formula& f) const noexcept {
    return std::hash<std::string>{}(f.text());
  }
};
