#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zdag/graph.hpp"
#include "zdag/labeling.hpp"

namespace zdag {

struct SearchBudget {
  std::uint64_t max_nodes = 100000000;  ///< label assignments tried
  double max_seconds = 60.0;
  bool find_all = false;  ///< count every solution instead of stopping
};

/// Budget that never cuts off; decides any instance it is pointed at.
SearchBudget exhaustive_budget();

/// Outcome of a search. DamlFound and TwinObstruction / Exhausted are
/// definitive; BudgetExceeded is not a refutation.
struct Certificate {
  enum class Kind {
    DamlFound,
    TwinObstruction,
    ExhaustedNoLabeling,
    BudgetExceeded,
  };
  Kind kind = Kind::BudgetExceeded;
  std::optional<Labeling> labeling;  ///< first solution found, if any
  std::optional<TwinPair> twin;
  std::uint64_t nodes_explored = 0;
  std::optional<std::uint64_t> all_solutions_count;  ///< find_all only

  bool definitive() const { return kind != Kind::BudgetExceeded; }
  bool exists() const { return kind == Kind::DamlFound; }
  nlohmann::json to_json() const;
};

std::string to_string(Certificate::Kind k);

/// Backtracking search for a distance antimagic labeling of g, or for
/// one whose weight multiset equals target when given. Twin pairs are
/// checked first and refute without searching. Vertices are assigned in
/// descending degree order (ties by id), labels in increasing order, so
/// the labeling returned is the least solution in that enumeration
/// order. A vertex's weight is final once all its neighbors hold
/// labels; equal final weights, and final weights outside the remaining
/// target multiset, prune immediately.
Certificate search_daml(const Graph& g, const SearchBudget& budget = {},
                        const std::optional<std::vector<std::int64_t>>& target =
                            std::nullopt);

/// Exhaustive decision for graphs of order at most 12; never returns
/// BudgetExceeded.
Certificate decide_small(const Graph& g);

}  // namespace zdag
