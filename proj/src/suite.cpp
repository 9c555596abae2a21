#include "zdag/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <set>

#include "zdag/constructions.hpp"
#include "zdag/errors.hpp"
#include "zdag/labeling.hpp"
#include "zdag/ops.hpp"
#include "zdag/rings.hpp"
#include "zdag/search.hpp"

namespace zdag {

namespace {

struct Check {
  bool ok = true;
  std::string why;
  std::string summary;

  void expect(bool cond, const std::string& message) {
    if (cond || !ok) return;
    ok = false;
    why = message;
  }
};

std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t m = lo; m <= hi; ++m) {
    if (is_prime(m)) out.push_back(m);
  }
  return out;
}

bool twin_pair_checks_out(const Graph& g, const std::optional<TwinPair>& twin) {
  return twin && twin->u != twin->v &&
         g.neighbors(twin->u) == g.neighbors(twin->v);
}

bool nonexistence_kind(Certificate::Kind k) {
  return k == Certificate::Kind::TwinObstruction ||
         k == Certificate::Kind::ExhaustedNoLabeling;
}

// 1. The two worked figure graphs, vertex and edge sets exactly.
Check criterion_figures(const SuiteOptions&) {
  Check c;
  const Graph g10 = zero_divisor_graph(Modulus(10));
  c.expect(g10.names() == std::vector<std::string>{"2", "4", "5", "6", "8"},
           "zn(10) vertex names are wrong");
  c.expect(g10.edges() == std::vector<std::pair<int, int>>{
                              {0, 2}, {1, 2}, {2, 3}, {2, 4}},
           "zn(10) edge set is wrong");
  const Graph g15 = zero_divisor_graph(Modulus(15));
  c.expect(g15.names() ==
               std::vector<std::string>{"3", "5", "6", "9", "10", "12"},
           "zn(15) vertex names are wrong");
  c.expect(g15.edges() == std::vector<std::pair<int, int>>{{0, 1},
                                                           {0, 4},
                                                           {1, 2},
                                                           {1, 3},
                                                           {1, 5},
                                                           {2, 4},
                                                           {3, 4},
                                                           {4, 5}},
           "zn(15) edge set is wrong");
  c.summary = "zn(10) and zn(15) reproduced exactly";
  return c;
}

// 2. T4: verified sweep, twin sweep, small-order refutations.
Check criterion_t4(const SuiteOptions& opts) {
  Check c;
  const std::int64_t m_hi = std::min<std::int64_t>(200, opts.m_max.value_or(200));
  for (std::int64_t m = 1; m <= m_hi && c.ok; ++m) {
    const auto res = build_t4(m, 1);
    c.expect(res.verdict == Verdict::VerifiedDAML,
             "t4 m=" + std::to_string(m) + " not verified: " +
                 to_string(res.verdict));
    if (!c.ok) break;
    c.expect(res.profile->weights == *res.expected_weights,
             "t4 m=" + std::to_string(m) + " weights differ from formulas");
    c.expect(res.profile->weights[2 * m] == m * (2 * m + 1),
             "t4 m=" + std::to_string(m) + " center weight is not m(2m+1)");
  }
  int refuted = 0;
  for (std::int64_t m = 1; m <= std::min<std::int64_t>(20, m_hi) && c.ok; ++m) {
    for (std::int64_t n = 2; n <= 5 && c.ok; ++n) {
      const auto res = build_t4(m, n);
      c.expect(res.verdict == Verdict::TwinObstruction &&
                   twin_pair_checks_out(res.graph, res.twin),
               "t4 m=" + std::to_string(m) + " n=" + std::to_string(n) +
                   " should be a twin obstruction");
      ++refuted;
    }
  }
  for (auto [m, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{
           {1, 2}, {1, 3}, {2, 2}, {3, 2}}) {
    if (!c.ok) break;
    const auto res = build_t4(m, n);
    c.expect(nonexistence_kind(decide_small(res.graph).kind),
             "decide_small should refute t4 (" + std::to_string(m) + "," +
                 std::to_string(n) + ")");
  }
  c.summary = std::to_string(m_hi) + " instances verified, " +
              std::to_string(refuted) + " refuted, 4 confirmed exhaustively";
  return c;
}

// 3. T7: verified sweep, the two defective sizes, ground truth at n=3
// and a budgeted attempt at n=4, twin sweep over m.
Check criterion_t7(const SuiteOptions& opts) {
  Check c;
  const std::int64_t n_hi = std::min<std::int64_t>(100, opts.m_max.value_or(100));
  int verified = 0;
  for (std::int64_t n = 1; n <= n_hi && c.ok; ++n) {
    const auto res = build_t7(1, n);
    if (n == 3) {
      c.expect(res.verdict == Verdict::LabelingCollision,
               "t7 n=3 should be a labeling collision");
      c.expect(res.collisions ==
                   std::vector<std::pair<int, int>>{{2, 7}, {5, 6}},
               "t7 n=3 collision pairs should be (2,7) and (5,6)");
      continue;
    }
    if (n == 4) {
      c.expect(res.verdict == Verdict::LabelingCollision,
               "t7 n=4 should be a labeling collision");
      c.expect(std::find(res.collisions.begin(), res.collisions.end(),
                         std::make_pair(4, 10)) != res.collisions.end(),
               "t7 n=4 collisions should include (4,10)");
      continue;
    }
    c.expect(res.verdict == Verdict::VerifiedDAML &&
                 res.profile->weights == *res.expected_weights,
             "t7 n=" + std::to_string(n) + " not verified");
    ++verified;
  }
  std::string truth3 = "skipped";
  if (c.ok && n_hi >= 3) {
    const auto cert = decide_small(build_t7(1, 3).graph);
    c.expect(cert.definitive(), "decide_small on t7 n=3 must be definitive");
    truth3 = cert.exists() ? "a different DAML exists" : "no DAML exists";
  }
  std::string truth4 = "skipped";
  if (c.ok && n_hi >= 4) {
    SearchBudget budget;
    budget.max_seconds = 60.0;
    const auto cert = search_daml(build_t7(1, 4).graph, budget);
    truth4 = cert.definitive()
                 ? (cert.exists() ? "a different DAML exists" : "no DAML exists")
                 : "undecided within budget";
  }
  for (std::int64_t m = 2; m <= 10 && c.ok; ++m) {
    const auto res = build_t7(m, 1);
    c.expect(res.verdict == Verdict::TwinObstruction &&
                 twin_pair_checks_out(res.graph, res.twin),
             "t7 m=" + std::to_string(m) + " should be a twin obstruction");
  }
  c.summary = std::to_string(verified) + " verified; collisions at n=3,4; n=3: " +
              truth3 + "; n=4: " + truth4;
  return c;
}

// 4. T8: the searched prism at m=1, then the formula sweep.
Check criterion_t8(const SuiteOptions& opts) {
  Check c;
  const auto res1 = build_t8(1);
  c.expect(res1.verdict == Verdict::VerifiedDAML, "t8 m=1 search failed");
  if (c.ok) {
    std::vector<std::int64_t> sorted = res1.profile->weights;
    std::sort(sorted.begin(), sorted.end());
    c.expect(sorted == std::vector<std::int64_t>{8, 9, 10, 11, 12, 13},
             "t8 m=1 weight multiset should be 8..13");
    c.expect(res1.profile->arithmetic &&
                 *res1.profile->arithmetic == std::make_pair<std::int64_t, std::int64_t>(8, 1),
             "t8 m=1 should be (8,1)-antimagic");
  }
  const std::int64_t m_hi = std::min<std::int64_t>(100, opts.m_max.value_or(100));
  for (std::int64_t m = 2; m <= m_hi && c.ok; ++m) {
    const auto res = build_t8(m);
    c.expect(res.verdict == Verdict::VerifiedDAML &&
                 res.profile->weights == *res.expected_weights,
             "t8 m=" + std::to_string(m) + " not verified");
    if (!c.ok) break;
    c.expect(res.profile->weights[4 * m] == 4 * m * m + 5 * m + 2 &&
                 res.profile->weights[4 * m + 1] == 4 * m * m + 5 * m + 1,
             "t8 m=" + std::to_string(m) + " center weights are off");
  }
  c.summary = "m=1 searched with progression (8,1); m=2.." +
              std::to_string(m_hi) + " formula-exact";
  return c;
}

// 5. T9: prime sweep plus the searched order-9 grid.
Check criterion_t9(const SuiteOptions& opts) {
  Check c;
  for (std::int64_t m : primes_in(5, opts.max_prime)) {
    if (!c.ok) break;
    const auto res = build_t9(m);
    c.expect(res.verdict == Verdict::VerifiedDAML &&
                 res.profile->weights == *res.expected_weights,
             "t9 m=" + std::to_string(m) + " not verified");
    if (!c.ok) break;
    c.expect(res.profile->weights[0] == (m * m + 7 * m - 2) / 2,
             "t9 m=" + std::to_string(m) + " first weight is off");
  }
  std::string attained = "skipped";
  if (c.ok) {
    const Graph grid = cartesian_product(zero_divisor_graph(Modulus(6)),
                                         zero_divisor_graph(Modulus(6)));
    c.expect(decide_small(grid).exists(),
             "decide_small should find a DAML on P3 x P3");
    const std::vector<std::int64_t> target{19, 24, 23, 6, 18, 8, 3, 11, 5};
    const auto cert = search_daml(grid, exhaustive_budget(), target);
    attained = cert.exists() ? "attainable" : "not attainable";
    const auto res3 = build_t9(3);
    c.expect(res3.verdict == Verdict::VerifiedDAML, "t9 m=3 search failed");
  }
  c.summary = "primes 5.." + std::to_string(opts.max_prime) +
              " formula-exact; m=3 stated multiset " + attained;
  return c;
}

// 6. T10: structural checks, exhaustive order 8, budgeted order 12.
Check criterion_t10(const SuiteOptions& opts) {
  Check c;
  std::vector<std::int64_t> ms = opts.m_values;
  if (ms.empty()) ms = {5, 7};
  std::string note;
  for (std::int64_t m : ms) {
    if (!c.ok) break;
    c.expect(structural_class(zero_divisor_graph(Modulus(m * m))) ==
                 complete_class(static_cast<int>(m - 1)),
             "zn(" + std::to_string(m * m) + ") should be K_" +
                 std::to_string(m - 1));
    if (!c.ok) break;
    SearchBudget budget;
    budget.max_seconds = 60.0;
    const auto res = build_t10(m, budget);
    if (res.graph.order() <= 8) {
      c.expect(res.verdict == Verdict::VerifiedDAML,
               "t10 m=" + std::to_string(m) + " search failed");
      if (c.ok) note += "m=" + std::to_string(m) + ": found; ";
    } else {
      c.expect(res.verdict == Verdict::VerifiedDAML ||
                   res.verdict == Verdict::BudgetExceeded,
               "t10 m=" + std::to_string(m) + " unexpected verdict " +
                   to_string(res.verdict));
      if (c.ok) {
        note += "m=" + std::to_string(m) + ": " +
                (res.verdict == Verdict::VerifiedDAML ? "found; " : "undecided; ");
      }
    }
  }
  c.summary = note.empty() ? "no instances" : note.substr(0, note.size() - 2);
  return c;
}

// 7. T11: prime sweep with the three weight groups pairwise separated,
// plus the searched order-6 grid.
Check criterion_t11(const SuiteOptions& opts) {
  Check c;
  for (std::int64_t m : primes_in(5, opts.max_prime)) {
    if (!c.ok) break;
    const auto res = build_t11(m);
    c.expect(res.verdict == Verdict::VerifiedDAML &&
                 res.profile->weights == *res.expected_weights,
             "t11 m=" + std::to_string(m) + " not verified");
    if (!c.ok) break;
    const auto& w = res.profile->weights;
    const auto g1_max = *std::max_element(w.begin(), w.begin() + (m - 1));
    const auto g2_min = *std::min_element(w.begin() + (m - 1),
                                          w.begin() + (2 * m - 2));
    const auto g2_max = *std::max_element(w.begin() + (m - 1),
                                          w.begin() + (2 * m - 2));
    const auto g3_min = *std::min_element(w.begin() + (2 * m - 2), w.end());
    c.expect(g1_max < g2_min && g2_max < g3_min,
             "t11 m=" + std::to_string(m) + " weight groups overlap");
  }
  if (c.ok) {
    const Graph grid = cartesian_product(zero_divisor_graph(Modulus(6)),
                                         zero_divisor_graph(Modulus(9)));
    c.expect(decide_small(grid).exists(),
             "decide_small should find a DAML on P3 x K2");
    const auto res3 = build_t11(3);
    c.expect(res3.verdict == Verdict::VerifiedDAML, "t11 m=3 search failed");
  }
  c.summary = "primes 5.." + std::to_string(opts.max_prime) +
              " formula-exact with disjoint weight groups; m=3 searched";
  return c;
}

// 8. T12: structural check, prime sweep, and the rejected composites.
Check criterion_t12(const SuiteOptions& opts) {
  Check c;
  for (std::int64_t m : primes_in(5, opts.max_prime)) {
    if (!c.ok) break;
    c.expect(structural_class(zero_divisor_graph(Modulus(3 * m))) ==
                 bipartite_class(2, static_cast<int>(m - 1)),
             "zn(" + std::to_string(3 * m) + ") should be K_{2," +
                 std::to_string(m - 1) + "}");
    if (!c.ok) break;
    const auto res = build_t12(m);
    c.expect(res.verdict == Verdict::VerifiedDAML &&
                 res.profile->weights == *res.expected_weights,
             "t12 m=" + std::to_string(m) + " not verified");
  }
  for (std::int64_t m : {9, 25}) {
    if (!c.ok) break;
    bool rejected = false;
    std::string message;
    try {
      build_t12(m);
    } catch (const UsageError& e) {
      rejected = true;
      message = e.what();
    }
    c.expect(rejected && message.find("K_{2,m-1}") != std::string::npos,
             "t12 m=" + std::to_string(m) +
                 " should be rejected with the class discrepancy spelled out");
  }
  c.summary = "primes 5.." + std::to_string(opts.max_prime) +
              " formula-exact; m=9 and m=25 rejected";
  return c;
}

// 9. The non-existence families, each instance twin-refuted, and
// re-refuted exhaustively when small enough.
Check criterion_nonexistence(const SuiteOptions& opts) {
  Check c;
  int instances = 0, exhaustive = 0;
  const auto run = [&](Family family, std::int64_t m, std::int64_t n) {
    if (!c.ok) return;
    const auto res = build_nonexistence(family, m, n);
    const std::string tag = to_string(family) + " m=" + std::to_string(m) +
                            " n=" + std::to_string(n);
    c.expect(res.verdict == Verdict::TwinObstruction &&
                 twin_pair_checks_out(res.graph, res.twin),
             tag + " should carry a checked twin pair");
    c.expect(!res.labeling.has_value(), tag + " should carry no labeling");
    ++instances;
    if (c.ok && res.graph.order() <= 8) {
      c.expect(nonexistence_kind(decide_small(res.graph).kind),
               tag + " should be refuted exhaustively");
      ++exhaustive;
    }
  };
  const auto wanted = [&](const char* name) {
    return !opts.family || *opts.family == name;
  };
  const auto ms_or = [&](std::vector<std::int64_t> defaults) {
    return opts.m_values.empty() ? defaults : opts.m_values;
  };
  if (wanted("nx21")) {
    for (std::int64_t m : ms_or({3, 5, 7, 11})) run(Family::NX21, m, 1);
  }
  if (wanted("nx2")) {
    for (std::int64_t m : ms_or({3, 5, 7, 11})) {
      for (std::int64_t n = 1; n <= 4; ++n) run(Family::NX2, m, n);
    }
  }
  if (wanted("nx3")) {
    for (std::int64_t m : ms_or({5, 7, 11})) {
      for (std::int64_t n = 1; n <= 4; ++n) run(Family::NX3, m, n);
    }
  }
  if (wanted("nx5")) {
    for (std::int64_t m : ms_or({1, 2, 3})) {
      for (std::int64_t n : {1, 2, 3}) run(Family::NX5, m, n);
    }
  }
  if (wanted("nx6")) {
    for (std::int64_t m : ms_or({1, 2, 3})) {
      for (std::int64_t n : {1, 2, 3}) run(Family::NX6, m, n);
    }
  }
  if (wanted("nxcor")) {
    for (std::int64_t m : ms_or({1, 2, 3})) run(Family::NXCOR, m, 1);
  }
  c.summary = std::to_string(instances) + " instances twin-refuted, " +
              std::to_string(exhaustive) + " re-refuted exhaustively";
  return c;
}

// 10. Randomized identities and the search-versus-brute-force cross
// check, all under a fixed seed.
Check criterion_properties(const SuiteOptions&) {
  Check c;
  std::mt19937_64 rng(0x5eedf00d);
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    const Graph g = random_graph(rng, 0, 12);
    const int n = g.order();
    std::vector<int> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    std::int64_t weight_sum = 0, degree_dot = 0;
    for (int v = 0; v < n; ++v) {
      for (int u : g.neighbors(v)) weight_sum += labels[u];
      degree_dot += static_cast<std::int64_t>(g.degree(v)) * labels[v];
    }
    c.expect(weight_sum == degree_dot,
             "weight-sum identity failed on trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 200 && c.ok; ++trial) {
    const Graph g = random_graph(rng, 1, 6);
    const Graph h = random_graph(rng, 1, 6);
    const Graph p = cartesian_product(g, h);
    c.expect(p.order() == g.order() * h.order(),
             "product order identity failed");
    c.expect(p.size() == static_cast<std::int64_t>(g.order()) * h.size() +
                             static_cast<std::int64_t>(h.order()) * g.size(),
             "product size identity failed");
    for (int u = 0; u < g.order() && c.ok; ++u) {
      for (int v = 0; v < h.order(); ++v) {
        if (p.degree(u * h.order() + v) != g.degree(u) + h.degree(v)) {
          c.expect(false, "product degree identity failed");
          break;
        }
      }
    }
  }
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    const Graph g = random_graph(rng, 1, 7);
    c.expect(decide_small(g).exists() == naive_daml_exists(g),
             "decide_small disagrees with brute force on trial " +
                 std::to_string(trial));
  }
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    const ExprPtr e = random_expr(rng, 6);
    const ExprPtr back = parse(unparse(e));
    c.expect(*back == *e,
             "parser round-trip failed on \"" + unparse(e) + "\"");
  }
  c.summary = "1000 weight-sum, 200 product, 100 search-vs-brute-force, "
              "1000 round-trip trials";
  return c;
}

struct CriterionSpec {
  int id;
  const char* name;
  double limit_seconds;
  Check (*body)(const SuiteOptions&);
  // families whose --family filter selects this criterion
  std::vector<std::string> tags;
};

const std::vector<CriterionSpec>& criteria() {
  static const std::vector<CriterionSpec> table = {
      {1, "figure graphs", 1.0, criterion_figures, {"figures"}},
      {2, "t4 join family", 10.0, criterion_t4, {"t4"}},
      {3, "t7 complement join", 90.0, criterion_t7, {"t7"}},
      {4, "t8 prism family", 10.0, criterion_t8, {"t8"}},
      {5, "t9 path-star grid", 60.0, criterion_t9, {"t9"}},
      {6, "t10 prism search", 90.0, criterion_t10, {"t10"}},
      {7, "t11 path-clique grid", 30.0, criterion_t11, {"t11"}},
      {8, "t12 bipartite prism", 30.0, criterion_t12, {"t12"}},
      {9,
       "non-existence families",
       30.0,
       criterion_nonexistence,
       {"nx21", "nx2", "nx3", "nx5", "nx6", "nxcor"}},
      {10, "property suites", 60.0, criterion_properties, {"props", "properties"}},
  };
  return table;
}

}  // namespace

std::vector<CriterionResult> run_suite(const SuiteOptions& opts,
                                       std::ostream& out) {
  std::vector<CriterionResult> results;
  bool matched_any = false;
  for (const auto& spec : criteria()) {
    if (opts.family &&
        std::find(spec.tags.begin(), spec.tags.end(), *opts.family) ==
            spec.tags.end()) {
      continue;
    }
    matched_any = true;
    CriterionResult r;
    r.id = spec.id;
    r.name = spec.name;
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = spec.body(opts);
    } catch (const std::exception& e) {
      c.ok = false;
      c.why = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
    r.pass = c.ok;
    r.detail = c.ok ? c.summary : c.why;
    if (r.pass && r.seconds >= spec.limit_seconds) {
      r.pass = false;
      r.detail = "over the " + std::to_string(spec.limit_seconds) +
                 " s limit: " + r.detail;
    }
    char line[64];
    std::snprintf(line, sizeof(line), "%2d  %-24s  %s  %7.2fs  ", r.id,
                  r.name.c_str(), r.pass ? "PASS" : "FAIL", r.seconds);
    out << line << r.detail << "\n";
    results.push_back(std::move(r));
  }
  if (opts.family && !matched_any) {
    throw UsageError("unknown family filter \"" + *opts.family + "\"");
  }
  int passed = 0;
  for (const auto& r : results) passed += r.pass ? 1 : 0;
  out << "result: " << passed << "/" << results.size() << " criteria passed\n";
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

bool naive_daml_exists(const Graph& g) {
  const int n = g.order();
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  do {
    bool distinct = true;
    std::vector<std::int64_t> weights(n, 0);
    for (int v = 0; v < n && distinct; ++v) {
      std::int64_t w = 0;
      for (int u : g.neighbors(v)) w += labels[u];
      weights[v] = w;
      for (int prev = 0; prev < v; ++prev) {
        if (weights[prev] == w) {
          distinct = false;
          break;
        }
      }
    }
    if (distinct) return true;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return false;
}

Graph random_graph(std::mt19937_64& rng, int min_order, int max_order) {
  std::uniform_int_distribution<int> order_dist(min_order, max_order);
  std::uniform_real_distribution<double> density_dist(0.15, 0.85);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const int n = order_dist(rng);
  const double p = density_dist(rng);
  std::vector<std::string> names;
  names.reserve(n);
  for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::build(std::move(names), edges);
}

ExprPtr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> mod_dist(2, 30);
  std::uniform_int_distribution<int> kind_dist(0, 99);
  std::uniform_int_distribution<int> count_dist(1, 3);
  std::uniform_int_distribution<int> arity_dist(2, 3);
  if (depth <= 0) return FamilyExpr::zn(mod_dist(rng));
  const int roll = kind_dist(rng);
  if (roll < 35) return FamilyExpr::zn(mod_dist(rng));
  if (roll < 50) return FamilyExpr::complement_of(random_expr(rng, depth - 1));
  if (roll < 65) {
    return FamilyExpr::copies_of(count_dist(rng), random_expr(rng, depth - 1));
  }
  if (roll < 82) {
    std::vector<ExprPtr> parts;
    const int arity = arity_dist(rng);
    for (int i = 0; i < arity; ++i) parts.push_back(random_expr(rng, depth - 1));
    return FamilyExpr::join_of(std::move(parts));
  }
  return FamilyExpr::product_of(random_expr(rng, depth - 1),
                                random_expr(rng, depth - 1));
}

}  // namespace zdag
