#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "zdag/errors.hpp"
#include "zdag/family_expr.hpp"
#include "zdag/graph.hpp"
#include "zdag/rings.hpp"
#include "zdag/suite.hpp"

using zdag::ExprPtr;
using zdag::FamilyExpr;
using zdag::Graph;
using zdag::ParseError;

namespace {

std::size_t offset_of(const std::string& text) {
  try {
    zdag::parse(text);
  } catch (const ParseError& e) {
    return e.offset;
  }
  FAIL("expected a parse error for: " << text);
  return std::string::npos;
}

}  // namespace

TEST_CASE("parse basic forms") {
  CHECK(*zdag::parse("zn(10)") == *FamilyExpr::zn(10));
  CHECK(*zdag::parse(" zn ( 10 ) ") == *FamilyExpr::zn(10));
  CHECK(*zdag::parse("comp(zn(6))") ==
        *FamilyExpr::complement_of(FamilyExpr::zn(6)));
  CHECK(*zdag::parse("3*zn(9)") ==
        *FamilyExpr::copies_of(3, FamilyExpr::zn(9)));
  CHECK(*zdag::parse("(zn(6))") == *FamilyExpr::zn(6));
}

TEST_CASE("parse precedence and associativity") {
  ExprPtr a = zdag::parse("2*zn(9)+zn(4)");
  CHECK(*a == *FamilyExpr::join_of({FamilyExpr::copies_of(2, FamilyExpr::zn(9)),
                                    FamilyExpr::zn(4)}));

  ExprPtr b = zdag::parse("(zn(9)+zn(4)) x zn(9)");
  CHECK(*b == *FamilyExpr::product_of(
                  FamilyExpr::join_of({FamilyExpr::zn(9), FamilyExpr::zn(4)}),
                  FamilyExpr::zn(9)));

  ExprPtr c = zdag::parse("zn(6) x zn(9)+zn(4)");
  CHECK(*c == *FamilyExpr::join_of(
                  {FamilyExpr::product_of(FamilyExpr::zn(6), FamilyExpr::zn(9)),
                   FamilyExpr::zn(4)}));

  ExprPtr d = zdag::parse("zn(6) x zn(9) x zn(4)");
  CHECK(*d == *FamilyExpr::product_of(
                  FamilyExpr::product_of(FamilyExpr::zn(6), FamilyExpr::zn(9)),
                  FamilyExpr::zn(4)));

  ExprPtr e = zdag::parse("zn(4)+zn(6)+zn(8)");
  REQUIRE(e->kind == FamilyExpr::Kind::Join);
  CHECK(e->children.size() == 3);

  ExprPtr f = zdag::parse("2*zn(9) x zn(4)");
  CHECK(*f == *FamilyExpr::product_of(
                  FamilyExpr::copies_of(2, FamilyExpr::zn(9)),
                  FamilyExpr::zn(4)));
}

TEST_CASE("letter runs split greedily") {
  CHECK(*zdag::parse("zn(6)xzn(9)") ==
        *FamilyExpr::product_of(FamilyExpr::zn(6), FamilyExpr::zn(9)));
  CHECK(*zdag::parse("zn(6)xcomp(zn(9))") ==
        *FamilyExpr::product_of(FamilyExpr::zn(6),
                                FamilyExpr::complement_of(FamilyExpr::zn(9))));
}

TEST_CASE("parse errors carry offsets") {
  CHECK(offset_of("") == 0);
  CHECK(offset_of("zn()") == 3);
  CHECK(offset_of("zn(1)") == 3);
  CHECK(offset_of("zn(0)") == 3);
  CHECK(offset_of("0*zn(4)") == 0);
  CHECK(offset_of("zn(4)+") == 6);
  CHECK(offset_of("(zn(4)") == 6);
  CHECK(offset_of("foo") == 0);
  CHECK(offset_of("zn(4) zn(5)") == 6);
  CHECK(offset_of("2 zn(4)") == 2);
  CHECK(offset_of("zn(99999999999999999999)") == 3);
  CHECK(offset_of("zn(6)%zn(9)") == 5);
}

TEST_CASE("parse errors are usage errors with a message") {
  try {
    zdag::parse("zn()");
    FAIL("expected a parse error");
  } catch (const zdag::UsageError& e) {
    CHECK(std::string(e.what()).find("offset 3") != std::string::npos);
  }
}

TEST_CASE("canonical unparse") {
  auto canon = [](const std::string& s) { return zdag::unparse(zdag::parse(s)); };
  CHECK(canon("2*zn(9)+zn(4)") == "2*zn(9)+zn(4)");
  CHECK(canon("( zn(9) + zn(4) ) x zn(9)") == "(zn(9)+zn(4)) x zn(9)");
  CHECK(canon("comp( zn(6) )") == "comp(zn(6))");
  CHECK(canon("zn(6)xzn(9)") == "zn(6) x zn(9)");
  CHECK(canon("zn(6) x zn(9) x zn(4)") == "zn(6) x zn(9) x zn(4)");
  CHECK(canon("zn(6) x (zn(9) x zn(4))") == "zn(6) x (zn(9) x zn(4))");
  CHECK(canon("(zn(4)+zn(6))+zn(8)") == "(zn(4)+zn(6))+zn(8)");
  CHECK(canon("2*(zn(6)+zn(4))") == "2*(zn(6)+zn(4))");
  CHECK(canon("2*(zn(6) x zn(9))") == "2*(zn(6) x zn(9))");
  CHECK(canon("comp(zn(6)+zn(9))") == "comp(zn(6)+zn(9))");
}

TEST_CASE("unparse round trips random expressions") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 500; ++trial) {
    ExprPtr e = zdag::random_expr(rng, 6);
    std::string text = zdag::unparse(e);
    ExprPtr back = zdag::parse(text);
    CAPTURE(text);
    CHECK(*e == *back);
  }
}

TEST_CASE("evaluate") {
  Graph g = zdag::evaluate(zdag::parse("zn(10)"));
  CHECK(g == zdag::zero_divisor_graph(zdag::Modulus(10)));

  Graph one = zdag::evaluate(zdag::parse("1*zn(4)"));
  CHECK(one.order() == 1);
  CHECK(one.name(0) == "c0:2");

  Graph prod = zdag::evaluate(zdag::parse("zn(6) x zn(9)"));
  CHECK(prod.order() == 6);
  CHECK(prod.size() == 7);

  Graph joined = zdag::evaluate(zdag::parse("zn(7)+zn(4)"));
  CHECK(joined.order() == 1);

  CHECK_THROWS_AS(zdag::evaluate(zdag::parse("zn(7) x zn(4)")),
                  zdag::UsageError);
}

TEST_CASE("two sided copy join via evaluate") {
  Graph g = zdag::evaluate(zdag::parse("2*zn(9)+3*zn(4)"));
  CHECK(g.order() == 7);
  CHECK(g.adjacent(0, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(4, 5));
  CHECK_FALSE(g.adjacent(4, 6));
  for (int u = 0; u < 4; ++u) {
    for (int v = 4; v < 7; ++v) CHECK(g.adjacent(u, v));
  }
  CHECK(g.size() == 2 + 12);
}
