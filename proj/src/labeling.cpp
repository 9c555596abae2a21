#include "zdag/labeling.hpp"

#include <algorithm>
#include <map>

#include "zdag/errors.hpp"

namespace zdag {

nlohmann::json Labeling::to_json() const {
  return nlohmann::json{{"labels", labels}};
}

Labeling Labeling::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("labels") || !j["labels"].is_array()) {
    throw ValidationError("labeling JSON must have a labels array");
  }
  Labeling f;
  f.labels.reserve(j["labels"].size());
  for (const auto& e : j["labels"]) {
    if (!e.is_number_integer()) {
      throw ValidationError("labeling JSON: labels entries must be integers");
    }
    f.labels.push_back(e.get<int>());
  }
  return f;
}

Labeling identity_labeling(const Graph& g) {
  Labeling f;
  f.labels.resize(g.order());
  for (int v = 0; v < g.order(); ++v) f.labels[v] = v + 1;
  return f;
}

nlohmann::json WeightProfile::to_json() const {
  nlohmann::json j;
  j["weights"] = weights;
  j["distinct"] = distinct;
  auto& jc = j["collisions"] = nlohmann::json::array();
  for (auto [u, v] : collisions) jc.push_back({u, v});
  if (arithmetic) {
    j["arithmetic"] = {{"a", arithmetic->first}, {"d", arithmetic->second}};
  } else {
    j["arithmetic"] = nullptr;
  }
  return j;
}

namespace {

// Weights and collision structure for any label vector of the right
// arity; bijectivity is checked separately.
WeightProfile profile_unchecked(const Graph& g, const std::vector<int>& labels) {
  const int n = g.order();
  WeightProfile p;
  p.weights.resize(n, 0);
  for (int v = 0; v < n; ++v) {
    std::int64_t w = 0;
    for (int u : g.neighbors(v)) w += labels[u];
    p.weights[v] = w;
  }
  std::map<std::int64_t, std::vector<int>> by_weight;
  for (int v = 0; v < n; ++v) by_weight[p.weights[v]].push_back(v);
  for (const auto& [w, members] : by_weight) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        p.collisions.emplace_back(members[i], members[j]);
      }
    }
  }
  std::sort(p.collisions.begin(), p.collisions.end());
  p.distinct = p.collisions.empty();
  if (n == 1) {
    p.arithmetic = {{p.weights[0], 0}};
  } else if (n >= 2 && p.distinct) {
    std::vector<std::int64_t> sorted = p.weights;
    std::sort(sorted.begin(), sorted.end());
    const std::int64_t d = sorted[1] - sorted[0];
    bool arith = d >= 1;
    for (std::size_t i = 2; i < sorted.size() && arith; ++i) {
      arith = sorted[i] - sorted[i - 1] == d;
    }
    if (arith) p.arithmetic = {{sorted[0], d}};
  }
  return p;
}

// Empty string when labels is a bijection onto 1..order, else the defect.
std::string bijection_defect(int n, const std::vector<int>& labels) {
  if (static_cast<int>(labels.size()) != n) {
    return "labeling has " + std::to_string(labels.size()) +
           " entries for a graph of order " + std::to_string(n);
  }
  std::vector<int> where(n + 1, -1);
  for (int v = 0; v < n; ++v) {
    const int l = labels[v];
    if (l < 1 || l > n) {
      return "label " + std::to_string(l) + " at vertex " + std::to_string(v) +
             " is outside 1.." + std::to_string(n);
    }
    if (where[l] != -1) {
      return "label " + std::to_string(l) + " appears at vertices " +
             std::to_string(where[l]) + " and " + std::to_string(v);
    }
    where[l] = v;
  }
  return "";
}

}  // namespace

WeightProfile weight_profile(const Graph& g, const Labeling& f) {
  const std::string defect = bijection_defect(g.order(), f.labels);
  if (!defect.empty()) throw ValidationError(defect);
  return profile_unchecked(g, f.labels);
}

DamlCheck verify_daml(const Graph& g, const Labeling& f) {
  DamlCheck check;
  const std::string defect = bijection_defect(g.order(), f.labels);
  if (static_cast<int>(f.labels.size()) == g.order()) {
    check.profile = profile_unchecked(g, f.labels);
  }
  if (!defect.empty()) {
    check.ok = false;
    check.reason = defect;
    return check;
  }
  if (!check.profile->distinct) {
    check.ok = false;
    auto [u, v] = check.profile->collisions.front();
    check.reason = "weights collide: vertices " + std::to_string(u) + " and " +
                   std::to_string(v) + " both weigh " +
                   std::to_string(check.profile->weights[u]);
    return check;
  }
  check.ok = true;
  return check;
}

}  // namespace zdag
