#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "zdag/errors.hpp"
#include "zdag/graph.hpp"

namespace zdag {

/// Expression tree over zero-divisor graphs:
///
///   expr   := prod ("+" prod)*          join, variadic
///   prod   := copies ("x" copies)*      cartesian product, left assoc
///   copies := INT "*" atom | atom
///   atom   := "zn" "(" INT ")" | "comp" "(" expr ")" | "(" expr ")"
///
/// Whitespace is insignificant.
struct FamilyExpr;
using ExprPtr = std::shared_ptr<const FamilyExpr>;

struct FamilyExpr {
  enum class Kind { Zn, Copies, Join, Product, Complement };
  Kind kind = Kind::Zn;
  std::uint64_t n = 0;             ///< Zn
  int k = 0;                       ///< Copies
  std::vector<ExprPtr> children;   ///< Copies/Complement: 1, Product: 2, Join: >= 2

  static ExprPtr zn(std::uint64_t n);
  static ExprPtr copies_of(int k, ExprPtr e);
  static ExprPtr join_of(std::vector<ExprPtr> parts);
  static ExprPtr product_of(ExprPtr g, ExprPtr h);
  static ExprPtr complement_of(ExprPtr e);
};

bool operator==(const FamilyExpr& a, const FamilyExpr& b);
inline bool operator!=(const FamilyExpr& a, const FamilyExpr& b) {
  return !(a == b);
}

/// Syntax or value error in an expression, with the byte offset of the
/// offending token and what was expected there.
struct ParseError : UsageError {
  std::size_t offset;
  std::string expected;
  ParseError(std::size_t offset, std::string expected);
};

ExprPtr parse(const std::string& text);

/// Canonical text form; parse(unparse(e)) reproduces e exactly, with
/// parentheses only where the grammar needs them.
std::string unparse(const FamilyExpr& e);
inline std::string unparse(const ExprPtr& e) { return unparse(*e); }

Graph evaluate(const FamilyExpr& e);
inline Graph evaluate(const ExprPtr& e) { return evaluate(*e); }

}  // namespace zdag
