#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "zdag/errors.hpp"
#include "zdag/graph.hpp"
#include "zdag/ops.hpp"
#include "zdag/rings.hpp"
#include "zdag/suite.hpp"

using zdag::Graph;
using zdag::Modulus;

namespace {

Graph zn(long long n) { return zdag::zero_divisor_graph(Modulus(n)); }

}  // namespace

TEST_CASE("complement") {
  Graph p3 = zn(6);
  Graph c = zdag::complement(p3);
  CHECK(c.order() == 3);
  CHECK(c.names() == p3.names());
  CHECK(c.edges() == std::vector<std::pair<int, int>>{{0, 2}});

  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = zdag::random_graph(rng, 0, 10);
    CHECK(zdag::complement(zdag::complement(g)) == g);
    long long full = static_cast<long long>(g.order()) * (g.order() - 1) / 2;
    CHECK(g.size() + zdag::complement(g).size() == full);
  }
}

TEST_CASE("copies") {
  Graph two = zdag::copies(2, zn(9));
  CHECK(two.order() == 4);
  CHECK(two.names() ==
        std::vector<std::string>{"c0:3", "c0:6", "c1:3", "c1:6"});
  CHECK(two.adjacent(0, 1));
  CHECK(two.adjacent(2, 3));
  CHECK_FALSE(two.adjacent(0, 2));
  CHECK_FALSE(two.adjacent(1, 2));
  CHECK(two.size() == 2);

  CHECK(zdag::copies(1, zn(9)).order() == 2);
  CHECK(zdag::copies(3, zn(4)).size() == 0);
  CHECK_THROWS_AS(zdag::copies(0, zn(9)), zdag::UsageError);
  CHECK_THROWS_AS(zdag::copies(-2, zn(9)), zdag::UsageError);
}

TEST_CASE("join of two parts") {
  Graph j = zdag::join({zn(9), zn(4)});
  CHECK(j.order() == 3);
  CHECK(j.names() == std::vector<std::string>{"p0:3", "p0:6", "p1:2"});
  CHECK(j.size() == 3);
  CHECK(zdag::structural_class(j) == zdag::complete_class(3));
}

TEST_CASE("join keeps same-side copies unjoined") {
  Graph j = zdag::join({zdag::copies(2, zn(9)), zn(4)});
  CHECK(j.order() == 5);
  CHECK(j.name(0) == "p0:c0:3");
  CHECK(j.name(4) == "p1:2");
  CHECK(j.adjacent(0, 1));
  CHECK_FALSE(j.adjacent(0, 2));
  CHECK_FALSE(j.adjacent(1, 3));
  for (int v = 0; v < 4; ++v) CHECK(j.adjacent(v, 4));
  CHECK(j.size() == 2 + 4);
}

TEST_CASE("join arity and empty parts") {
  CHECK_THROWS_AS(zdag::join({zn(9)}), zdag::UsageError);
  CHECK_THROWS_AS(zdag::join({}), zdag::UsageError);

  Graph j = zdag::join({zn(7), zn(4)});
  CHECK(j.order() == 1);
  CHECK(j.size() == 0);
  CHECK(j.name(0) == "p1:2");
}

TEST_CASE("join of three parts is mutual") {
  Graph j = zdag::join({zn(4), zn(4), zn(4)});
  CHECK(j.order() == 3);
  CHECK(zdag::structural_class(j) == zdag::complete_class(3));
}

TEST_CASE("cartesian product") {
  Graph p = zdag::cartesian_product(zn(6), zn(9));
  CHECK(p.order() == 6);
  CHECK(p.size() == 7);
  CHECK(p.name(0) == "(2,3)");
  CHECK(p.name(1) == "(2,6)");
  CHECK(p.name(5) == "(4,6)");
  CHECK(p.adjacent(0, 1));
  CHECK(p.adjacent(0, 2));
  CHECK_FALSE(p.adjacent(0, 3));
  CHECK_FALSE(p.adjacent(0, 5));

  Graph prism = zdag::cartesian_product(zn(9), zn(9));
  CHECK(prism.order() == 4);
  CHECK(prism.size() == 4);
  CHECK(zdag::structural_class(prism) == zdag::bipartite_class(2, 2));

  CHECK_THROWS_AS(zdag::cartesian_product(zn(7), zn(4)), zdag::UsageError);
  CHECK_THROWS_AS(zdag::cartesian_product(zn(4), zn(7)), zdag::UsageError);
}

TEST_CASE("cartesian product identities") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = zdag::random_graph(rng, 1, 5);
    Graph h = zdag::random_graph(rng, 1, 5);
    Graph p = zdag::cartesian_product(g, h);
    CHECK(p.order() == g.order() * h.order());
    CHECK(p.size() == g.size() * h.order() + h.size() * g.order());
    for (int u = 0; u < g.order(); ++u) {
      for (int v = 0; v < h.order(); ++v) {
        int id = u * h.order() + v;
        CHECK(p.degree(id) == g.degree(u) + h.degree(v));
      }
    }
  }
}
