#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zdag/graph.hpp"

namespace zdag {

/// Vertex labeling: labels[v] is the label of vertex v. A distance
/// antimagic labeling is a bijection onto 1..order whose weights
/// w(v) = sum of labels over the open neighborhood of v are pairwise
/// distinct.
struct Labeling {
  std::vector<int> labels;

  nlohmann::json to_json() const;
  static Labeling from_json(const nlohmann::json& j);
  bool operator==(const Labeling&) const = default;
};

/// labels[v] = v + 1. The prescribed labelings in the construction
/// families are all of this form after arranging the vertex order.
Labeling identity_labeling(const Graph& g);

struct WeightProfile {
  std::vector<std::int64_t> weights;
  bool distinct = true;
  /// All pairs u < v with equal weights, sorted lexicographically.
  std::vector<std::pair<int, int>> collisions;
  /// (a, d) when the sorted weights form an arithmetic progression
  /// with common difference d >= 1; meaningful only when distinct.
  std::optional<std::pair<std::int64_t, std::int64_t>> arithmetic;

  nlohmann::json to_json() const;
};

/// Weights of g under f. Throws ValidationError naming the defect when
/// f is not a bijection onto 1..order.
WeightProfile weight_profile(const Graph& g, const Labeling& f);

struct DamlCheck {
  bool ok = false;
  /// Present whenever the label count matches the order, so collisions
  /// are reported even for rejected labelings.
  std::optional<WeightProfile> profile;
  std::string reason;  ///< empty when ok
};

/// True iff f is a bijection onto 1..order with pairwise distinct
/// weights. Never throws on bad labelings; the reason says why.
DamlCheck verify_daml(const Graph& g, const Labeling& f);

}  // namespace zdag
