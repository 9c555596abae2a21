#include "zdag/constructions.hpp"

#include <algorithm>

#include "zdag/errors.hpp"
#include "zdag/ops.hpp"
#include "zdag/rings.hpp"

namespace zdag {

std::string to_string(Family f) {
  switch (f) {
    case Family::T4: return "t4";
    case Family::T7: return "t7";
    case Family::T8: return "t8";
    case Family::T9: return "t9";
    case Family::T10: return "t10";
    case Family::T11: return "t11";
    case Family::T12: return "t12";
    case Family::NX21: return "nx21";
    case Family::NX2: return "nx2";
    case Family::NX3: return "nx3";
    case Family::NX5: return "nx5";
    case Family::NX6: return "nx6";
    case Family::NXCOR: return "nxcor";
  }
  return "t4";
}

std::optional<Family> family_from_string(const std::string& s) {
  static const std::pair<const char*, Family> table[] = {
      {"t4", Family::T4},     {"t7", Family::T7},   {"t8", Family::T8},
      {"t9", Family::T9},     {"t10", Family::T10}, {"t11", Family::T11},
      {"t12", Family::T12},   {"nx21", Family::NX21}, {"nx2", Family::NX2},
      {"nx3", Family::NX3},   {"nx5", Family::NX5}, {"nx6", Family::NX6},
      {"nxcor", Family::NXCOR},
  };
  for (const auto& [name, fam] : table) {
    if (s == name) return fam;
  }
  return std::nullopt;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::VerifiedDAML: return "VerifiedDAML";
    case Verdict::FormulaMismatch: return "FormulaMismatch";
    case Verdict::LabelingCollision: return "LabelingCollision";
    case Verdict::TwinObstruction: return "TwinObstruction";
    case Verdict::NoLabelingFound: return "NoLabelingFound";
    case Verdict::BudgetExceeded: return "BudgetExceeded";
  }
  return "VerifiedDAML";
}

bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  for (std::int64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

nlohmann::json ConstructionResult::to_json() const {
  nlohmann::json j;
  j["family"] = to_string(family);
  j["m"] = m;
  j["n"] = n;
  j["graph"] = graph.to_json();
  j["labels"] = labeling ? nlohmann::json(labeling->labels) : nlohmann::json(nullptr);
  j["expected_weights"] = expected_weights ? nlohmann::json(*expected_weights)
                                           : nlohmann::json(nullptr);
  j["verdict"] = to_string(verdict);
  nlohmann::json d;
  d["note"] = detail.empty() ? nlohmann::json(nullptr) : nlohmann::json(detail);
  d["twin"] = twin ? nlohmann::json{twin->u, twin->v} : nlohmann::json(nullptr);
  if (collisions.empty()) {
    d["collisions"] = nullptr;
  } else {
    auto& jc = d["collisions"] = nlohmann::json::array();
    for (auto [u, v] : collisions) jc.push_back({u, v});
  }
  d["profile"] = profile ? profile->to_json() : nlohmann::json(nullptr);
  j["detail"] = d;
  return j;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void check_order_cap(std::int64_t order) {
  if (order > static_cast<std::int64_t>(kDefaultVertexCap)) {
    throw ResourceError("construction would have " + std::to_string(order) +
                        " vertices, over the cap of " +
                        std::to_string(kDefaultVertexCap));
  }
}

// Builds new_to_old from 1-based (position, old id) assignments and
// checks that every position was assigned exactly once.
class Arrangement {
 public:
  explicit Arrangement(int order) : new_to_old_(order, -1) {}

  void place(std::int64_t position, std::int64_t old_id) {
    const auto n = static_cast<std::int64_t>(new_to_old_.size());
    if (position < 1 || position > n || old_id < 0 || old_id >= n ||
        new_to_old_[position - 1] != -1) {
      throw InternalError("bad arrangement assignment: position " +
                          std::to_string(position) + " <- " +
                          std::to_string(old_id));
    }
    new_to_old_[position - 1] = static_cast<int>(old_id);
  }

  Graph apply(const Graph& g) const {
    for (int v : new_to_old_) {
      if (v == -1) throw InternalError("arrangement leaves a position unset");
    }
    return g.permuted(new_to_old_);
  }

 private:
  std::vector<int> new_to_old_;
};

// Identity labeling against the closed-form weights.
void finish_prescribed(ConstructionResult& res) {
  res.labeling = identity_labeling(res.graph);
  res.profile = weight_profile(res.graph, *res.labeling);
  if (res.expected_weights && res.profile->weights != *res.expected_weights) {
    const auto& got = res.profile->weights;
    const auto& want = *res.expected_weights;
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (got[i] != want[i]) {
        res.detail = "weight of vertex " + std::to_string(i) + " is " +
                     std::to_string(got[i]) + ", formula says " +
                     std::to_string(want[i]);
        break;
      }
    }
    res.verdict = Verdict::FormulaMismatch;
    return;
  }
  if (!res.profile->distinct) {
    res.verdict = Verdict::LabelingCollision;
    res.collisions = res.profile->collisions;
    return;
  }
  res.verdict = Verdict::VerifiedDAML;
}

// Search-based instances: map the certificate onto a verdict.
void finish_search(ConstructionResult& res, const SearchBudget& budget,
                   const std::optional<std::vector<std::int64_t>>& target,
                   const std::string& note) {
  const Certificate cert = search_daml(res.graph, budget, target);
  switch (cert.kind) {
    case Certificate::Kind::DamlFound:
      res.labeling = cert.labeling;
      res.profile = weight_profile(res.graph, *res.labeling);
      res.verdict = Verdict::VerifiedDAML;
      res.detail = note;
      break;
    case Certificate::Kind::TwinObstruction:
      res.verdict = Verdict::TwinObstruction;
      res.twin = cert.twin;
      break;
    case Certificate::Kind::ExhaustedNoLabeling:
      res.verdict = Verdict::NoLabelingFound;
      res.detail = "exhaustive search found no labeling";
      break;
    case Certificate::Kind::BudgetExceeded:
      res.verdict = Verdict::BudgetExceeded;
      res.detail = "search budget exceeded after " +
                   std::to_string(cert.nodes_explored) + " assignments";
      break;
  }
}

void attach_twin(ConstructionResult& res) {
  const auto twin = find_twin_pair(res.graph);
  if (!twin) {
    throw InternalError("family " + to_string(res.family) + " (m=" +
                        std::to_string(res.m) + ", n=" + std::to_string(res.n) +
                        ") was expected to contain twins but has none");
  }
  res.verdict = Verdict::TwinObstruction;
  res.twin = *twin;
  res.detail = "N(\"" + res.graph.name(twin->u) + "\") = N(\"" +
               res.graph.name(twin->v) + "\")";
}

Graph menu_graph(std::int64_t selector) {
  switch (selector) {
    case 1: return zero_divisor_graph(Modulus(6));
    case 2: return zero_divisor_graph(Modulus(9));
    case 3: return complement(zero_divisor_graph(Modulus(6)));
    case 4: return complement(zero_divisor_graph(Modulus(9)));
    default:
      throw UsageError(
          "the join partner selector n must be 1..4 "
          "(1: zn(6), 2: zn(9), 3: comp(zn(6)), 4: comp(zn(9))), got " +
          std::to_string(selector));
  }
}

}  // namespace

void validate_params(const FamilyParams& p) {
  const std::int64_t m = p.m, n = p.n;
  switch (p.family) {
    case Family::T4:
    case Family::T7:
      require(m >= 1 && n >= 1, "family " + to_string(p.family) +
                                    " requires m >= 1 and n >= 1, got m=" +
                                    std::to_string(m) + ", n=" +
                                    std::to_string(n));
      break;
    case Family::T8:
      require(m >= 1, "family t8 requires m >= 1, got m=" + std::to_string(m));
      break;
    case Family::T9:
      require(is_prime(m) && m != 2,
              "family t9 requires a prime m other than 2, got m=" +
                  std::to_string(m));
      break;
    case Family::T10:
      require(is_prime(m) && m > 3,
              "family t10 requires a prime m greater than 3, got m=" +
                  std::to_string(m) +
                  (m == 3 ? " (the order-4 product is a cycle with twins)"
                          : ""));
      break;
    case Family::T11:
      require(is_prime(m) && m >= 3,
              "family t11 requires a prime m of at least 3, got m=" +
                  std::to_string(m));
      break;
    case Family::T12:
      require(is_prime(m) && m > 3,
              "family t12 requires a prime m greater than 3, got m=" +
                  std::to_string(m) +
                  "; for composite odd m the second factor is not "
                  "K_{2,m-1} and the order is not 2m+2");
      break;
    case Family::NX21:
      require(is_prime(m) && m >= 3,
              "family nx21 requires a prime m of at least 3, got m=" +
                  std::to_string(m));
      break;
    case Family::NX2:
      require(is_prime(m) && m >= 3,
              "family nx2 requires a prime m of at least 3, got m=" +
                  std::to_string(m));
      menu_graph(n);
      break;
    case Family::NX3:
      require(is_prime(m) && m >= 5,
              "family nx3 requires a prime m of at least 5, got m=" +
                  std::to_string(m));
      menu_graph(n);
      break;
    case Family::NX5:
    case Family::NX6:
      require(m >= 1 && n >= 1, "family " + to_string(p.family) +
                                    " requires m >= 1 and n >= 1, got m=" +
                                    std::to_string(m) + ", n=" +
                                    std::to_string(n));
      break;
    case Family::NXCOR:
      require(m >= 1,
              "family nxcor requires m >= 1, got m=" + std::to_string(m));
      break;
  }
}

ConstructionResult build_t4(std::int64_t m, std::int64_t n) {
  validate_params({Family::T4, m, n});
  check_order_cap(2 * m + n);
  ConstructionResult res;
  res.family = Family::T4;
  res.m = m;
  res.n = n;
  const Graph z9 = zero_divisor_graph(Modulus(9));
  const Graph z4 = zero_divisor_graph(Modulus(4));
  res.graph = join({copies(static_cast<int>(m), z9),
                    copies(static_cast<int>(n), z4)});
  if (n > 1) {
    attach_twin(res);
    return res;
  }
  std::vector<std::int64_t> expected;
  for (std::int64_t i = 1; i <= 2 * m; ++i) {
    expected.push_back(i % 2 == 1 ? 2 * m + 2 + i : 2 * m + i);
  }
  expected.push_back(m * (2 * m + 1));
  res.expected_weights = std::move(expected);
  finish_prescribed(res);
  return res;
}

ConstructionResult build_t7(std::int64_t m, std::int64_t n) {
  validate_params({Family::T7, m, n});
  check_order_cap(2 * n + 3 * m);
  ConstructionResult res;
  res.family = Family::T7;
  res.m = m;
  res.n = n;
  const Graph z9 = zero_divisor_graph(Modulus(9));
  const Graph c6 = complement(zero_divisor_graph(Modulus(6)));
  if (m > 1) {
    res.graph = join({copies(static_cast<int>(n), z9),
                      copies(static_cast<int>(m), c6)});
    attach_twin(res);
    return res;
  }
  const std::int64_t N = 2 * n;
  const Graph natural = join({copies(static_cast<int>(n), z9), c6});
  // the complement contributes its edge (elements 2 and 4) first and its
  // isolated element 3 last
  Arrangement arr(natural.order());
  for (std::int64_t i = 1; i <= N; ++i) arr.place(i, i - 1);
  arr.place(N + 1, N);
  arr.place(N + 2, N + 2);
  arr.place(N + 3, N + 1);
  res.graph = arr.apply(natural);
  std::vector<std::int64_t> expected;
  for (std::int64_t i = 1; i <= N; ++i) {
    expected.push_back(i % 2 == 1 ? 3 * N + i + 7 : 3 * N + i + 5);
  }
  expected.push_back((N * N + 3 * N + 4) / 2);
  expected.push_back((N * N + 3 * N + 2) / 2);
  expected.push_back((N * N + N) / 2);
  res.expected_weights = std::move(expected);
  finish_prescribed(res);
  return res;
}

ConstructionResult build_t8(std::int64_t m) {
  validate_params({Family::T8, m, 1});
  check_order_cap(4 * m + 2);
  ConstructionResult res;
  res.family = Family::T8;
  res.m = m;
  const Graph z9 = zero_divisor_graph(Modulus(9));
  const Graph z4 = zero_divisor_graph(Modulus(4));
  const Graph base = join({copies(static_cast<int>(m), z9), z4});
  const Graph natural = cartesian_product(base, z9);
  if (m == 1) {
    res.graph = natural;
    std::vector<std::int64_t> target{8, 9, 10, 11, 12, 13};
    finish_search(res, exhaustive_budget(), target,
                  "labeling found by search with target weights 8..13");
    if (res.verdict == Verdict::VerifiedDAML) {
      if (!res.profile->arithmetic ||
          *res.profile->arithmetic != std::make_pair<std::int64_t, std::int64_t>(8, 1)) {
        throw InternalError("triangular prism labeling should be (8,1)-antimagic");
      }
      res.detail = "labeling found by search; weights are the progression 8..13";
    }
    return res;
  }
  // base pair k sits at base ids (2k-2, 2k-1), the base center at 2m;
  // product id of (base u, copy j) is 2u + j
  Arrangement arr(natural.order());
  arr.place(4 * m + 1, 4 * m);
  arr.place(4 * m + 2, 4 * m + 1);
  for (std::int64_t k = 1; k <= m; ++k) {
    const std::int64_t a = 2 * k - 2, b = 2 * k - 1;
    arr.place(k, 2 * a);
    arr.place(4 * m + 1 - k, 2 * b);
    arr.place(2 * m + 1 - k, 2 * a + 1);
    arr.place(2 * m + k, 2 * b + 1);
  }
  res.graph = arr.apply(natural);
  std::vector<std::int64_t> expected;
  for (std::int64_t i = 1; i <= m; ++i) expected.push_back(10 * m + 3 - 2 * i);
  for (std::int64_t i = m + 1; i <= 2 * m; ++i) expected.push_back(10 * m + 4 - 2 * i);
  for (std::int64_t i = 2 * m + 1; i <= 3 * m; ++i) expected.push_back(14 * m + 4 - 2 * i);
  for (std::int64_t i = 3 * m + 1; i <= 4 * m; ++i) expected.push_back(14 * m + 3 - 2 * i);
  expected.push_back(4 * m * m + 5 * m + 2);
  expected.push_back(4 * m * m + 5 * m + 1);
  res.expected_weights = std::move(expected);
  finish_prescribed(res);
  return res;
}

ConstructionResult build_t9(std::int64_t m) {
  validate_params({Family::T9, m, 1});
  check_order_cap(3 * m);
  ConstructionResult res;
  res.family = Family::T9;
  res.m = m;
  const Graph g = zero_divisor_graph(Modulus(6));
  const Graph h = zero_divisor_graph(Modulus(2 * m));
  const Graph natural = cartesian_product(g, h);
  if (m == 3) {
    res.graph = natural;
    std::vector<std::int64_t> target{19, 24, 23, 6, 18, 8, 3, 11, 5};
    ConstructionResult probe = res;
    finish_search(probe, exhaustive_budget(), target,
                  "search attained the stated weight multiset");
    if (probe.verdict == Verdict::VerifiedDAML) {
      return probe;
    }
    finish_search(res, exhaustive_budget(), std::nullopt,
                  "the stated weight multiset is unattainable; search found a "
                  "labeling with different weights");
    return res;
  }
  // h is the star K_{1,m-1}; its center is the residue named m. The path
  // factor runs layer 1 (residue 2), layer 3 (residue 3, the middle),
  // layer 2 (residue 4).
  const int horder = h.order();
  int center = -1;
  std::vector<int> leaves;
  for (int v = 0; v < horder; ++v) {
    if (h.name(v) == std::to_string(m)) {
      center = v;
    } else {
      leaves.push_back(v);
    }
  }
  if (center == -1 || static_cast<std::int64_t>(h.order()) != m) {
    throw InternalError("star factor of t9 has an unexpected shape");
  }
  const auto idx = [&](std::int64_t layer, std::int64_t hv) {
    return layer * horder + hv;
  };
  Arrangement arr(natural.order());
  arr.place(1, idx(0, center));
  arr.place(m + 1, idx(2, center));
  arr.place(3 * m, idx(1, center));
  for (std::int64_t i = 2; i <= m; ++i) {
    arr.place(i, idx(0, leaves[i - 2]));
    arr.place(m + i, idx(2, leaves[i - 2]));
  }
  for (std::int64_t t = 1; t <= m - 1; ++t) {
    arr.place(2 * m + t, idx(1, leaves[m - t - 1]));
  }
  res.graph = arr.apply(natural);
  std::vector<std::int64_t> expected;
  expected.push_back((m * m + 7 * m - 2) / 2);
  for (std::int64_t i = 2; i <= m; ++i) expected.push_back(3 * m - i + 2);
  expected.push_back((3 * m * m + 5 * m - 2) / 2);
  for (std::int64_t i = 2; i <= m; ++i) expected.push_back(4 * m - i + 2);
  for (std::int64_t t = 1; t <= m - 1; ++t) expected.push_back(6 * m - 2 * t + 2);
  expected.push_back((5 * m * m - 3 * m + 4) / 2);
  res.expected_weights = std::move(expected);
  finish_prescribed(res);
  return res;
}

ConstructionResult build_t10(std::int64_t m, const SearchBudget& budget) {
  validate_params({Family::T10, m, 1});
  check_order_cap(2 * (m - 1));
  ConstructionResult res;
  res.family = Family::T10;
  res.m = m;
  const Graph gk = zero_divisor_graph(Modulus(m * m));
  const Graph z9 = zero_divisor_graph(Modulus(9));
  if (structural_class(gk) != complete_class(static_cast<int>(m - 1))) {
    throw InternalError("zn(m^2) is not the complete graph K_{m-1}");
  }
  if (structural_class(z9) != complete_class(2)) {
    throw InternalError("zn(9) is not K2");
  }
  res.graph = cartesian_product(gk, z9);
  const SearchBudget effective =
      res.graph.order() <= 8 ? exhaustive_budget() : budget;
  finish_search(res, effective, std::nullopt,
                "labeling found by search on the prism over K_" +
                    std::to_string(m - 1));
  return res;
}

ConstructionResult build_t11(std::int64_t m) {
  validate_params({Family::T11, m, 1});
  check_order_cap(3 * (m - 1));
  ConstructionResult res;
  res.family = Family::T11;
  res.m = m;
  const Graph g = zero_divisor_graph(Modulus(6));
  const Graph h = zero_divisor_graph(Modulus(m * m));
  const Graph natural = cartesian_product(g, h);
  if (m == 3) {
    res.graph = natural;
    finish_search(res, exhaustive_budget(), std::nullopt,
                  "labeling found by search on the order-6 grid");
    return res;
  }
  const int horder = h.order();
  const auto idx = [&](std::int64_t layer, std::int64_t hv) {
    return layer * horder + hv;
  };
  Arrangement arr(natural.order());
  for (std::int64_t t = 1; t <= m - 1; ++t) {
    arr.place(t, idx(0, t - 1));
    arr.place(m - 1 + t, idx(2, t - 1));
    arr.place(3 * m - 2 - t, idx(1, t - 1));
  }
  res.graph = arr.apply(natural);
  std::vector<std::int64_t> expected;
  for (std::int64_t i = 1; i <= m - 1; ++i) {
    expected.push_back((m * m + 5 * m - 4) / 2 - 2 * i);
  }
  for (std::int64_t i = m; i <= 2 * m - 2; ++i) {
    expected.push_back((3 * m * m + 3 * m - 4) / 2 - 2 * i);
  }
  for (std::int64_t i = 2 * m - 1; i <= 3 * m - 3; ++i) {
    const std::int64_t j = 3 + i - 2 * m;
    expected.push_back((5 * m * m - 9 * m + 4) / 2 - i + (3 * m - (2 * j - 1)));
  }
  res.expected_weights = std::move(expected);
  finish_prescribed(res);
  return res;
}

ConstructionResult build_t12(std::int64_t m) {
  validate_params({Family::T12, m, 1});
  check_order_cap(2 * m + 2);
  ConstructionResult res;
  res.family = Family::T12;
  res.m = m;
  const Graph h = zero_divisor_graph(Modulus(3 * m));
  if (structural_class(h) != bipartite_class(2, static_cast<int>(m - 1))) {
    throw InternalError("zn(3m) is not K_{2,m-1}");
  }
  const Graph g = zero_divisor_graph(Modulus(9));
  const Graph natural = cartesian_product(g, h);
  const int horder = h.order();
  int hub1 = -1, hub2 = -1;
  std::vector<int> leaves;
  for (int v = 0; v < horder; ++v) {
    if (h.name(v) == std::to_string(m)) {
      hub1 = v;
    } else if (h.name(v) == std::to_string(2 * m)) {
      hub2 = v;
    } else {
      leaves.push_back(v);
    }
  }
  if (hub1 == -1 || hub2 == -1 ||
      static_cast<std::int64_t>(leaves.size()) != m - 1) {
    throw InternalError("bipartite factor of t12 has an unexpected shape");
  }
  const auto idx = [&](std::int64_t layer, std::int64_t hv) {
    return layer * horder + hv;
  };
  Arrangement arr(natural.order());
  arr.place(1, idx(0, hub1));
  arr.place(2, idx(0, hub2));
  arr.place(m + 2, idx(1, hub1));
  arr.place(m + 3, idx(1, hub2));
  for (std::int64_t t = 1; t <= m - 1; ++t) {
    arr.place(2 + t, idx(0, leaves[t - 1]));
    arr.place(m + 3 + t, idx(1, leaves[t - 1]));
  }
  res.graph = arr.apply(natural);
  std::vector<std::int64_t> expected;
  expected.push_back((m * m + 5 * m) / 2);
  expected.push_back((m * m + 5 * m + 2) / 2);
  for (std::int64_t i = 3; i <= m + 1; ++i) expected.push_back(m + i + 4);
  expected.push_back((3 * m * m + 3 * m - 4) / 2);
  expected.push_back((3 * m * m + 3 * m - 2) / 2);
  for (std::int64_t i = m + 4; i <= 2 * m + 2; ++i) expected.push_back(m + i + 4);
  res.expected_weights = std::move(expected);
  finish_prescribed(res);
  return res;
}

ConstructionResult build_nonexistence(Family family, std::int64_t m,
                                      std::int64_t n) {
  validate_params({family, m, n});
  ConstructionResult res;
  res.family = family;
  res.m = m;
  res.n = n;
  switch (family) {
    case Family::NX21:
      check_order_cap(m + 1);
      res.graph = join({zero_divisor_graph(Modulus(2 * m)),
                        zero_divisor_graph(Modulus(4))});
      break;
    case Family::NX2:
      check_order_cap(m + 3);
      res.graph = join({zero_divisor_graph(Modulus(2 * m)), menu_graph(n)});
      break;
    case Family::NX3:
      check_order_cap(m + 4);
      res.graph = join({zero_divisor_graph(Modulus(3 * m)), menu_graph(n)});
      break;
    case Family::NX5:
      check_order_cap(3 * m + n);
      res.graph = join({copies(static_cast<int>(m), zero_divisor_graph(Modulus(6))),
                        copies(static_cast<int>(n), zero_divisor_graph(Modulus(4)))});
      break;
    case Family::NX6:
      check_order_cap(3 * m + 2 * n);
      res.graph = join({copies(static_cast<int>(m), zero_divisor_graph(Modulus(6))),
                        copies(static_cast<int>(n), zero_divisor_graph(Modulus(9)))});
      break;
    case Family::NXCOR: {
      check_order_cap(3 * m + 2);
      res.graph = join({copies(static_cast<int>(m), zero_divisor_graph(Modulus(6))),
                        complement(zero_divisor_graph(Modulus(9)))});
      // the two complement vertices are isolated on their side, so their
      // neighborhoods are both exactly the other side
      const int u = static_cast<int>(3 * m), v = static_cast<int>(3 * m + 1);
      if (res.graph.neighbors(u) != res.graph.neighbors(v)) {
        throw InternalError("nxcor complement vertices are not twins");
      }
      res.verdict = Verdict::TwinObstruction;
      res.twin = TwinPair{u, v};
      res.detail = "N(\"" + res.graph.name(u) + "\") = N(\"" +
                   res.graph.name(v) + "\")";
      return res;
    }
    default:
      throw UsageError("family " + to_string(family) +
                       " is not a non-existence family");
  }
  attach_twin(res);
  return res;
}

ConstructionResult build_family(const FamilyParams& p,
                                const SearchBudget& budget) {
  switch (p.family) {
    case Family::T4: return build_t4(p.m, p.n);
    case Family::T7: return build_t7(p.m, p.n);
    case Family::T8: return build_t8(p.m);
    case Family::T9: return build_t9(p.m);
    case Family::T10: return build_t10(p.m, budget);
    case Family::T11: return build_t11(p.m);
    case Family::T12: return build_t12(p.m);
    default: return build_nonexistence(p.family, p.m, p.n);
  }
}

}  // namespace zdag
