#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "zdag/errors.hpp"
#include "zdag/graph.hpp"
#include "zdag/suite.hpp"

using zdag::Graph;

namespace {

Graph cycle4() {
  return Graph::build({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

Graph path(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
    if (i > 0) edges.push_back({i - 1, i});
  }
  return Graph::build(names, edges);
}

}  // namespace

TEST_CASE("graph construction basics") {
  Graph g = Graph::build({"x", "y", "z"}, {{0, 1}, {1, 2}});
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
  CHECK(g.name(0) == "x");
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK_FALSE(g.adjacent(1, 1));
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK(g.degree_sequence() == std::vector<int>{2, 1, 1});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("graph rejects malformed input") {
  CHECK_THROWS_AS(Graph::build({"a", "a"}, {}), zdag::UsageError);
  CHECK_THROWS_AS(Graph::build({"a", "b"}, {{0, 2}}), zdag::UsageError);
  CHECK_THROWS_AS(Graph::build({"a", "b"}, {{-1, 0}}), zdag::UsageError);
  CHECK_THROWS_AS(Graph::build({"a", "b"}, {{1, 1}}), zdag::UsageError);
  CHECK_THROWS_AS(Graph::build({"a"}, {}).neighbors(1), zdag::UsageError);
}

TEST_CASE("duplicate edges collapse") {
  Graph g = Graph::build({"a", "b"}, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.size() == 1);
  CHECK(g.degree(0) == 1);
}

TEST_CASE("empty graph") {
  Graph g = Graph::build({}, {});
  CHECK(g.order() == 0);
  CHECK(g.size() == 0);
  CHECK(g.edges().empty());
  CHECK_FALSE(zdag::find_twin_pair(g).has_value());
}

TEST_CASE("permuted relabels vertices consistently") {
  Graph g = path(4);
  std::vector<int> new_to_old = {2, 0, 3, 1};
  Graph h = g.permuted(new_to_old);
  CHECK(h.order() == 4);
  CHECK(h.size() == g.size());
  for (int u = 0; u < 4; ++u) {
    CHECK(h.name(u) == g.name(new_to_old[u]));
    for (int v = 0; v < 4; ++v) {
      CHECK(h.adjacent(u, v) == g.adjacent(new_to_old[u], new_to_old[v]));
    }
  }
  CHECK_THROWS_AS(g.permuted({0, 0, 1, 2}), zdag::UsageError);
  CHECK_THROWS_AS(g.permuted({0, 1, 2}), zdag::UsageError);
}

TEST_CASE("json round trip") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = zdag::random_graph(rng, 0, 10);
    Graph h = Graph::from_json(g.to_json());
    CHECK(g == h);
  }
  Graph fig = cycle4();
  nlohmann::json j = fig.to_json();
  CHECK(j.at("order") == 4);
  CHECK(j.at("names").size() == 4);
  CHECK(j.at("edges").size() == 4);
}

TEST_CASE("from_json validates") {
  using nlohmann::json;
  json bad = {{"order", 2}, {"names", {"a"}}, {"edges", json::array()}};
  CHECK_THROWS_AS(Graph::from_json(bad), zdag::ValidationError);
  json loop = {{"order", 2}, {"names", {"a", "b"}}, {"edges", {{0, 0}}}};
  CHECK_THROWS_AS(Graph::from_json(loop), zdag::UsageError);
}

TEST_CASE("dot output lists vertices and edges") {
  Graph g = Graph::build({"2", "3"}, {{0, 1}});
  std::string dot = g.to_dot();
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("\"2\"") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("twin detection") {
  SUBCASE("cycle of length four") {
    auto t = zdag::find_twin_pair(cycle4());
    REQUIRE(t.has_value());
    CHECK(t->u == 0);
    CHECK(t->v == 2);
  }
  SUBCASE("path on three vertices has end twins") {
    auto t = zdag::find_twin_pair(path(3));
    REQUIRE(t.has_value());
    CHECK(t->u == 0);
    CHECK(t->v == 2);
  }
  SUBCASE("triangle has none") {
    Graph k3 = Graph::build({"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}});
    CHECK_FALSE(zdag::find_twin_pair(k3).has_value());
  }
  SUBCASE("two isolated vertices are twins") {
    auto t = zdag::find_twin_pair(Graph::build({"a", "b"}, {}));
    REQUIRE(t.has_value());
    CHECK(t->u == 0);
    CHECK(t->v == 1);
  }
  SUBCASE("path on four vertices has none") {
    CHECK_FALSE(zdag::find_twin_pair(path(4)).has_value());
  }
  SUBCASE("single vertex has none") {
    CHECK_FALSE(zdag::find_twin_pair(path(1)).has_value());
  }
}

TEST_CASE("twin pair is lexicographically least") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = zdag::random_graph(rng, 2, 9);
    auto fast = zdag::find_twin_pair(g);
    std::optional<zdag::TwinPair> slow;
    for (int u = 0; u < g.order() && !slow; ++u) {
      for (int v = u + 1; v < g.order() && !slow; ++v) {
        if (g.neighbors(u) == g.neighbors(v)) slow = zdag::TwinPair{u, v};
      }
    }
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      CHECK(fast->u == slow->u);
      CHECK(fast->v == slow->v);
    }
  }
}
