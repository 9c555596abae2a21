#include <doctest.h>

#include <numeric>
#include <string>
#include <vector>

#include "zdag/errors.hpp"
#include "zdag/graph.hpp"
#include "zdag/rings.hpp"

using zdag::Graph;
using zdag::Modulus;
using zdag::StructuralClass;

namespace {

std::vector<long long> sieve_totients(int limit) {
  std::vector<long long> phi(limit + 1);
  std::iota(phi.begin(), phi.end(), 0LL);
  for (int p = 2; p <= limit; ++p) {
    if (phi[p] == p) {
      for (int k = p; k <= limit; k += p) phi[k] -= phi[k] / p;
    }
  }
  return phi;
}

Graph brute_zdg(long long n) {
  std::vector<long long> verts;
  for (long long x = 1; x < n; ++x) {
    bool zd = false;
    for (long long y = 1; y < n && !zd; ++y) {
      if (x * y % n == 0) zd = true;
    }
    if (zd) verts.push_back(x);
  }
  std::vector<std::string> names;
  for (long long v : verts) names.push_back(std::to_string(v));
  std::vector<std::pair<int, int>> edges;
  for (size_t i = 0; i < verts.size(); ++i) {
    for (size_t j = i + 1; j < verts.size(); ++j) {
      if (verts[i] * verts[j] % n == 0) {
        edges.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  return Graph::build(names, edges);
}

}  // namespace

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(Modulus(1), zdag::UsageError);
  CHECK_THROWS_AS(Modulus(0), zdag::UsageError);
  CHECK(Modulus(2).value == 2);
}

TEST_CASE("euler totient") {
  CHECK(zdag::euler_totient(1) == 1);
  CHECK(zdag::euler_totient(2) == 1);
  CHECK(zdag::euler_totient(9) == 6);
  CHECK(zdag::euler_totient(12) == 4);
  CHECK(zdag::euler_totient(97) == 96);
  CHECK(zdag::euler_totient(1000000) == 400000);
}

TEST_CASE("zero divisor graph of Z10") {
  Graph g = zdag::zero_divisor_graph(Modulus(10));
  CHECK(g.order() == 5);
  CHECK(g.names() == std::vector<std::string>{"2", "4", "5", "6", "8"});
  CHECK(g.edges() ==
        std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {2, 3}, {2, 4}});
  CHECK(g.degree_sequence() == std::vector<int>{4, 1, 1, 1, 1});
}

TEST_CASE("zero divisor graph of Z15") {
  Graph g = zdag::zero_divisor_graph(Modulus(15));
  CHECK(g.order() == 6);
  CHECK(g.names() == std::vector<std::string>{"3", "5", "6", "9", "10", "12"});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1},
                                                      {0, 4},
                                                      {1, 2},
                                                      {1, 3},
                                                      {1, 5},
                                                      {2, 4},
                                                      {3, 4},
                                                      {4, 5}});
  CHECK(g.degree_sequence() == std::vector<int>{4, 4, 2, 2, 2, 2});
}

TEST_CASE("small zero divisor graphs") {
  Graph z6 = zdag::zero_divisor_graph(Modulus(6));
  CHECK(z6.names() == std::vector<std::string>{"2", "3", "4"});
  CHECK(z6.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  Graph z9 = zdag::zero_divisor_graph(Modulus(9));
  CHECK(z9.names() == std::vector<std::string>{"3", "6"});
  CHECK(z9.edges() == std::vector<std::pair<int, int>>{{0, 1}});

  Graph z4 = zdag::zero_divisor_graph(Modulus(4));
  CHECK(z4.names() == std::vector<std::string>{"2"});
  CHECK(z4.size() == 0);

  Graph z7 = zdag::zero_divisor_graph(Modulus(7));
  CHECK(z7.order() == 0);

  Graph z25 = zdag::zero_divisor_graph(Modulus(25));
  CHECK(z25.order() == 4);
  CHECK(z25.size() == 6);
}

TEST_CASE("zero divisor graph matches brute force for small n") {
  for (long long n = 2; n <= 60; ++n) {
    Graph fast = zdag::zero_divisor_graph(Modulus(n));
    Graph slow = brute_zdg(n);
    CAPTURE(n);
    CHECK(fast == slow);
  }
}

TEST_CASE("vertex count equals n minus phi minus one") {
  auto phi = sieve_totients(10000);
  for (long long n = 2; n <= 10000; ++n) {
    auto zds = zdag::zero_divisors(Modulus(n));
    CAPTURE(n);
    CHECK(static_cast<long long>(zds.size()) == n - phi[n] - 1);
  }
  for (long long n = 2; n <= 500; ++n) {
    Graph g = zdag::zero_divisor_graph(Modulus(n));
    CAPTURE(n);
    CHECK(static_cast<long long>(g.order()) == n - phi[n] - 1);
  }
}

TEST_CASE("vertex cap enforced") {
  CHECK_THROWS_AS(zdag::zero_divisor_graph(Modulus(30), 3),
                  zdag::ResourceError);
  CHECK_NOTHROW(zdag::zero_divisor_graph(Modulus(30), 21));
}

TEST_CASE("structural classification") {
  using Kind = StructuralClass::Kind;
  auto cls = [](const Graph& g) { return zdag::structural_class(g); };

  CHECK(cls(Graph::build({}, {})).kind == Kind::Empty);
  CHECK(cls(zdag::zero_divisor_graph(Modulus(4))) == zdag::complete_class(1));
  CHECK(cls(zdag::zero_divisor_graph(Modulus(9))) == zdag::complete_class(2));
  CHECK(cls(zdag::zero_divisor_graph(Modulus(25))) == zdag::complete_class(4));

  CHECK(cls(zdag::zero_divisor_graph(Modulus(10))) == zdag::star_class(2, 4));
  CHECK(cls(zdag::zero_divisor_graph(Modulus(6))) == zdag::star_class(1, 2));

  CHECK(cls(zdag::zero_divisor_graph(Modulus(15))) ==
        zdag::bipartite_class(2, 4));
  CHECK(cls(zdag::zero_divisor_graph(Modulus(21))) ==
        zdag::bipartite_class(2, 6));

  Graph p4 = Graph::build({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(cls(p4) == zdag::path_class(4));

  Graph p5 = Graph::build({"a", "b", "c", "d", "e"},
                          {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(cls(p5) == zdag::path_class(5));

  Graph c4 =
      Graph::build({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(cls(c4) == zdag::bipartite_class(2, 2));

  Graph c5 = Graph::build({"a", "b", "c", "d", "e"},
                          {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(cls(c5).kind == Kind::Other);

  Graph two_isolated = Graph::build({"a", "b"}, {});
  CHECK(cls(two_isolated).kind == Kind::Other);

  Graph z12 = zdag::zero_divisor_graph(Modulus(12));
  CHECK(cls(z12).kind == Kind::Other);
}

TEST_CASE("structural descriptions") {
  auto desc = [](long long n) {
    Graph g = zdag::zero_divisor_graph(Modulus(n));
    return zdag::structural_class(g).describe(g);
  };
  CHECK(desc(25) == "Complete(K_4)");
  CHECK(desc(10) == "Star(center \"5\", 4 leaves)");
  CHECK(desc(15) == "CompleteBipartite(K_{2,4})");
}
