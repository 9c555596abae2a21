#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace zdag {

/// Immutable simple graph with named vertices. Identity is positional:
/// ids run 0..order-1 and every operation is stated in ids; names record
/// where a vertex came from (ring element, copy index, product pair).
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from a name list and an undirected edge list.
  /// Rejects duplicate names, out-of-range endpoints and loops.
  /// Duplicate edges collapse to one.
  static Graph build(std::vector<std::string> names,
                     const std::vector<std::pair<int, int>>& edge_list);

  int order() const { return static_cast<int>(names_.size()); }
  std::int64_t size() const { return edge_count_; }

  const std::string& name(int v) const;
  const std::vector<std::string>& names() const { return names_; }

  bool adjacent(int u, int v) const;

  /// Open neighborhood of v, ascending by id.
  const std::vector<int>& neighbors(int v) const;

  int degree(int v) const;

  /// Degree multiset sorted descending.
  std::vector<int> degree_sequence() const;

  /// Edge list with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  /// Graph whose vertex i is this graph's vertex new_to_old[i];
  /// new_to_old must be a permutation of 0..order-1.
  Graph permuted(const std::vector<int>& new_to_old) const;

  nlohmann::json to_json() const;
  static Graph from_json(const nlohmann::json& j);
  std::string to_dot() const;

  bool operator==(const Graph& other) const {
    return names_ == other.names_ && adj_ == other.adj_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> adj_;
  std::int64_t edge_count_ = 0;

  void check_vertex(int v) const;
};

/// Two distinct vertices with identical open neighborhoods. Such a pair
/// is never adjacent, and it pins equal weights under every bijection,
/// so it certifies that no distance antimagic labeling exists.
struct TwinPair {
  int u = 0;
  int v = 0;
  bool operator==(const TwinPair&) const = default;
};

/// Lexicographically least twin pair, or nullopt if neighborhoods are
/// pairwise distinct.
std::optional<TwinPair> find_twin_pair(const Graph& g);

}  // namespace zdag
