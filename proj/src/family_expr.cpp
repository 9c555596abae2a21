#include "zdag/family_expr.hpp"

#include <cctype>
#include <limits>

#include "zdag/ops.hpp"
#include "zdag/rings.hpp"

namespace zdag {

ExprPtr FamilyExpr::zn(std::uint64_t n) {
  auto e = std::make_shared<FamilyExpr>();
  e->kind = Kind::Zn;
  e->n = n;
  return e;
}

ExprPtr FamilyExpr::copies_of(int k, ExprPtr child) {
  auto e = std::make_shared<FamilyExpr>();
  e->kind = Kind::Copies;
  e->k = k;
  e->children = {std::move(child)};
  return e;
}

ExprPtr FamilyExpr::join_of(std::vector<ExprPtr> parts) {
  auto e = std::make_shared<FamilyExpr>();
  e->kind = Kind::Join;
  e->children = std::move(parts);
  return e;
}

ExprPtr FamilyExpr::product_of(ExprPtr g, ExprPtr h) {
  auto e = std::make_shared<FamilyExpr>();
  e->kind = Kind::Product;
  e->children = {std::move(g), std::move(h)};
  return e;
}

ExprPtr FamilyExpr::complement_of(ExprPtr child) {
  auto e = std::make_shared<FamilyExpr>();
  e->kind = Kind::Complement;
  e->children = {std::move(child)};
  return e;
}

bool operator==(const FamilyExpr& a, const FamilyExpr& b) {
  if (a.kind != b.kind || a.n != b.n || a.k != b.k ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!(*a.children[i] == *b.children[i])) return false;
  }
  return true;
}

ParseError::ParseError(std::size_t offset, std::string expected)
    : UsageError("parse error at offset " + std::to_string(offset) + ": " +
                 expected),
      offset(offset),
      expected(std::move(expected)) {}

namespace {

enum class Tok { Int, Zn, Comp, X, Plus, Star, LParen, RParen, End };

struct Token {
  Tok kind;
  std::uint64_t value = 0;
  std::size_t offset = 0;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = i;
      std::uint64_t value = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        const std::uint64_t digit = static_cast<std::uint64_t>(text[i] - '0');
        if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
          throw ParseError(start, "a smaller integer (value overflows)");
        }
        value = value * 10 + digit;
        ++i;
      }
      out.push_back({Tok::Int, value, start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() &&
             std::isalpha(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      // split a letter run into keywords greedily, so "zn(6)xzn(9)"
      // needs no spaces around the x
      std::size_t pos = start;
      while (pos < i) {
        if (text.compare(pos, 4, "comp") == 0) {
          out.push_back({Tok::Comp, 0, pos});
          pos += 4;
        } else if (text.compare(pos, 2, "zn") == 0) {
          out.push_back({Tok::Zn, 0, pos});
          pos += 2;
        } else if (text[pos] == 'x') {
          out.push_back({Tok::X, 0, pos});
          pos += 1;
        } else {
          throw ParseError(pos, "one of zn, comp, x (got \"" +
                                    text.substr(pos, i - pos) + "\")");
        }
      }
      continue;
    }
    switch (c) {
      case '+':
        out.push_back({Tok::Plus, 0, i});
        break;
      case '*':
        out.push_back({Tok::Star, 0, i});
        break;
      case '(':
        out.push_back({Tok::LParen, 0, i});
        break;
      case ')':
        out.push_back({Tok::RParen, 0, i});
        break;
      default:
        throw ParseError(i, "a token (unexpected character '" +
                                std::string(1, c) + "')");
    }
    ++i;
  }
  out.push_back({Tok::End, 0, text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(lex(text)) {}

  ExprPtr parse() {
    ExprPtr e = parse_expr();
    expect(Tok::End, "end of input, '+', 'x' or '*'");
    return e;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;

  const Token& peek() const { return tokens_[pos_]; }

  Token take() { return tokens_[pos_++]; }

  Token expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) throw ParseError(peek().offset, what);
    return take();
  }

  ExprPtr parse_expr() {
    std::vector<ExprPtr> parts;
    parts.push_back(parse_prod());
    while (peek().kind == Tok::Plus) {
      take();
      parts.push_back(parse_prod());
    }
    if (parts.size() == 1) return parts[0];
    return FamilyExpr::join_of(std::move(parts));
  }

  ExprPtr parse_prod() {
    ExprPtr e = parse_copies();
    while (peek().kind == Tok::X) {
      take();
      e = FamilyExpr::product_of(std::move(e), parse_copies());
    }
    return e;
  }

  ExprPtr parse_copies() {
    if (peek().kind == Tok::Int) {
      const Token count = take();
      if (count.value < 1) {
        throw ParseError(count.offset, "a copy count of at least 1");
      }
      if (count.value > static_cast<std::uint64_t>(
                            std::numeric_limits<int>::max())) {
        throw ParseError(count.offset, "a smaller copy count");
      }
      expect(Tok::Star, "'*' after a copy count");
      return FamilyExpr::copies_of(static_cast<int>(count.value), parse_atom());
    }
    return parse_atom();
  }

  ExprPtr parse_atom() {
    switch (peek().kind) {
      case Tok::Zn: {
        take();
        expect(Tok::LParen, "'(' after zn");
        if (peek().kind != Tok::Int) {
          throw ParseError(peek().offset, "an integer modulus");
        }
        const Token mod = take();
        if (mod.value < 2) {
          throw ParseError(mod.offset, "a modulus of at least 2");
        }
        expect(Tok::RParen, "')'");
        return FamilyExpr::zn(mod.value);
      }
      case Tok::Comp: {
        take();
        expect(Tok::LParen, "'(' after comp");
        ExprPtr inner = parse_expr();
        expect(Tok::RParen, "')'");
        return FamilyExpr::complement_of(std::move(inner));
      }
      case Tok::LParen: {
        take();
        ExprPtr inner = parse_expr();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        throw ParseError(peek().offset,
                         "an atom: zn(N), comp(...), or a parenthesized "
                         "expression");
    }
  }
};

enum class Level { Join = 0, Product = 1, Atom = 2 };

Level level_of(const FamilyExpr& e) {
  switch (e.kind) {
    case FamilyExpr::Kind::Join:
      return Level::Join;
    case FamilyExpr::Kind::Product:
    case FamilyExpr::Kind::Copies:
      return Level::Product;
    default:
      return Level::Atom;
  }
}

void unparse_into(const FamilyExpr& e, std::string& out, Level min_level) {
  const bool wrap = level_of(e) < min_level;
  if (wrap) out += "(";
  switch (e.kind) {
    case FamilyExpr::Kind::Zn:
      out += "zn(" + std::to_string(e.n) + ")";
      break;
    case FamilyExpr::Kind::Complement:
      out += "comp(";
      unparse_into(*e.children[0], out, Level::Join);
      out += ")";
      break;
    case FamilyExpr::Kind::Copies:
      out += std::to_string(e.k) + "*";
      unparse_into(*e.children[0], out, Level::Atom);
      break;
    case FamilyExpr::Kind::Join:
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out += "+";
        // a nested join must keep its own parentheses to survive the
        // flattening reparse
        const Level need =
            e.children[i]->kind == FamilyExpr::Kind::Join ? Level::Atom
                                                          : Level::Product;
        unparse_into(*e.children[i], out, need);
      }
      break;
    case FamilyExpr::Kind::Product: {
      const auto& l = *e.children[0];
      const auto& r = *e.children[1];
      unparse_into(l, out, Level::Product);
      out += " x ";
      // the product chain is left associative, so a product (or copies,
      // which binds tighter anyway) on the right needs parentheses only
      // when it is itself a product
      const Level need = r.kind == FamilyExpr::Kind::Product ? Level::Atom
                                                             : Level::Product;
      unparse_into(r, out, need);
      break;
    }
  }
  if (wrap) out += ")";
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).parse(); }

std::string unparse(const FamilyExpr& e) {
  std::string out;
  unparse_into(e, out, Level::Join);
  return out;
}

Graph evaluate(const FamilyExpr& e) {
  switch (e.kind) {
    case FamilyExpr::Kind::Zn:
      return zero_divisor_graph(Modulus(e.n));
    case FamilyExpr::Kind::Copies:
      return copies(e.k, evaluate(*e.children[0]));
    case FamilyExpr::Kind::Complement:
      return complement(evaluate(*e.children[0]));
    case FamilyExpr::Kind::Product:
      return cartesian_product(evaluate(*e.children[0]),
                               evaluate(*e.children[1]));
    case FamilyExpr::Kind::Join: {
      std::vector<Graph> parts;
      parts.reserve(e.children.size());
      for (const auto& c : e.children) parts.push_back(evaluate(*c));
      return join(parts);
    }
  }
  throw InternalError("unhandled expression kind");
}

}  // namespace zdag
