#include "zdag/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "zdag/errors.hpp"

namespace zdag {

SearchBudget exhaustive_budget() {
  SearchBudget b;
  b.max_nodes = std::numeric_limits<std::uint64_t>::max();
  b.max_seconds = std::numeric_limits<double>::infinity();
  return b;
}

std::string to_string(Certificate::Kind k) {
  switch (k) {
    case Certificate::Kind::DamlFound:
      return "DamlFound";
    case Certificate::Kind::TwinObstruction:
      return "TwinObstruction";
    case Certificate::Kind::ExhaustedNoLabeling:
      return "ExhaustedNoLabeling";
    case Certificate::Kind::BudgetExceeded:
      return "BudgetExceeded";
  }
  return "BudgetExceeded";
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json j;
  j["kind"] = to_string(kind);
  j["labeling"] = labeling ? labeling->to_json() : nlohmann::json(nullptr);
  j["twin"] = twin ? nlohmann::json{twin->u, twin->v} : nlohmann::json(nullptr);
  j["nodes_explored"] = nodes_explored;
  j["all_solutions_count"] =
      all_solutions_count ? nlohmann::json(*all_solutions_count)
                          : nlohmann::json(nullptr);
  return j;
}

namespace {

// Occurrence counts keyed by weight. Dense vector when the weight range
// is small, hash map otherwise.
class WeightCounts {
 public:
  explicit WeightCounts(std::int64_t max_weight) {
    if (max_weight <= kDenseLimit) {
      dense_.assign(static_cast<std::size_t>(max_weight) + 1, 0);
    }
  }

  int increment(std::int64_t w) {
    if (!dense_.empty()) return ++dense_[static_cast<std::size_t>(w)];
    return ++sparse_[w];
  }

  int decrement(std::int64_t w) {
    if (!dense_.empty()) return --dense_[static_cast<std::size_t>(w)];
    return --sparse_[w];
  }

  void add(std::int64_t w) {
    if (w < 0) return;  // unreachable weights can never be consumed
    if (!dense_.empty()) {
      if (w < static_cast<std::int64_t>(dense_.size())) {
        ++dense_[static_cast<std::size_t>(w)];
      }
    } else {
      ++sparse_[w];
    }
  }

 private:
  static constexpr std::int64_t kDenseLimit = 1 << 22;
  std::vector<int> dense_;
  std::unordered_map<std::int64_t, int> sparse_;
};

struct Searcher {
  const std::vector<std::vector<int>> adj;
  const int n;
  const SearchBudget budget;
  const bool targeted;

  std::vector<int> order;      // assignment order: descending degree, ties by id
  std::vector<int> labels;     // by vertex id, 0 = unassigned
  std::vector<char> used;      // by label
  std::vector<std::int64_t> partial;
  std::vector<int> remaining;  // unlabeled neighbors
  WeightCounts seen;
  WeightCounts target_left;

  std::uint64_t nodes = 0;
  std::uint64_t solutions = 0;
  std::vector<int> first_solution;
  bool budget_hit = false;
  std::chrono::steady_clock::time_point start;

  Searcher(const Graph& g, const SearchBudget& b,
           const std::optional<std::vector<std::int64_t>>& target)
      : adj([&] {
          std::vector<std::vector<int>> a(g.order());
          for (int v = 0; v < g.order(); ++v) a[v] = g.neighbors(v);
          return a;
        }()),
        n(g.order()),
        budget(b),
        targeted(target.has_value()),
        labels(n, 0),
        used(static_cast<std::size_t>(n) + 1, 0),
        partial(n, 0),
        remaining(n, 0),
        seen(static_cast<std::int64_t>(n) * (n + 1) / 2),
        target_left(static_cast<std::int64_t>(n) * (n + 1) / 2) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return adj[a].size() != adj[b].size() ? adj[a].size() > adj[b].size()
                                            : a < b;
    });
    for (int v = 0; v < n; ++v) remaining[v] = static_cast<int>(adj[v].size());
    if (target) {
      for (std::int64_t w : *target) target_left.add(w);
    }
    start = std::chrono::steady_clock::now();
  }

  bool over_time() const {
    const auto elapsed = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start);
    return elapsed.count() > budget.max_seconds;
  }

  // Registers a weight that just became final; false on a pruning conflict.
  bool finalize(std::int64_t w) {
    bool ok = seen.increment(w) < 2;
    if (targeted && target_left.decrement(w) < 0) ok = false;
    return ok;
  }

  void definalize(std::int64_t w) {
    seen.decrement(w);
    if (targeted) target_left.increment(w);
  }

  bool assign(int v, int label) {
    used[label] = 1;
    labels[v] = label;
    bool ok = true;
    for (int u : adj[v]) {
      partial[u] += label;
      if (--remaining[u] == 0 && !finalize(partial[u])) ok = false;
    }
    return ok;
  }

  void unassign(int v, int label) {
    for (int u : adj[v]) {
      if (remaining[u] == 0) definalize(partial[u]);
      ++remaining[u];
      partial[u] -= label;
    }
    labels[v] = 0;
    used[label] = 0;
  }

  // Isolated vertices have weight 0 from the start; with at most one
  // (two would be twins) this just consumes a zero from the target.
  bool settle_isolated() {
    bool ok = true;
    for (int v = 0; v < n; ++v) {
      if (remaining[v] == 0 && !finalize(0)) ok = false;
    }
    return ok;
  }

  void run() {
    if (!settle_isolated()) return;
    std::vector<int> last(n + 1, 0);  // label tried last at each depth
    int depth = 0;
    while (true) {
      if (depth == n) {
        ++solutions;
        if (first_solution.empty()) first_solution = labels;
        if (!budget.find_all) return;
        --depth;
        unassign(order[depth], last[depth]);
        continue;
      }
      const int v = order[depth];
      int label = last[depth] + 1;
      while (label <= n && used[label]) ++label;
      if (label > n) {
        last[depth] = 0;
        if (depth == 0) return;
        --depth;
        unassign(order[depth], last[depth]);
        continue;
      }
      if (++nodes > budget.max_nodes ||
          ((nodes & 0xfff) == 0 && over_time())) {
        budget_hit = true;
        return;
      }
      const bool ok = assign(v, label);
      last[depth] = label;
      if (!ok) {
        unassign(v, label);
        continue;
      }
      ++depth;
      last[depth] = 0;
    }
  }
};

}  // namespace

Certificate search_daml(const Graph& g, const SearchBudget& budget,
                        const std::optional<std::vector<std::int64_t>>& target) {
  Certificate cert;
  cert.kind = Certificate::Kind::DamlFound;
  if (g.order() == 0) {
    cert.labeling = Labeling{};
    if (budget.find_all) cert.all_solutions_count = 1;
    return cert;
  }
  if (auto twin = find_twin_pair(g)) {
    cert.kind = Certificate::Kind::TwinObstruction;
    cert.twin = *twin;
    return cert;
  }
  if (target && static_cast<int>(target->size()) != g.order()) {
    throw UsageError("target multiset has " + std::to_string(target->size()) +
                     " entries for a graph of order " +
                     std::to_string(g.order()));
  }
  Searcher searcher(g, budget, target);
  searcher.run();
  cert.nodes_explored = searcher.nodes;
  if (!searcher.first_solution.empty()) {
    cert.labeling = Labeling{searcher.first_solution};
  }
  // the count is reported only when the enumeration ran to completion
  if (budget.find_all && !searcher.budget_hit) {
    cert.all_solutions_count = searcher.solutions;
  }
  if (searcher.solutions > 0) {
    cert.kind = Certificate::Kind::DamlFound;
  } else if (searcher.budget_hit) {
    cert.kind = Certificate::Kind::BudgetExceeded;
  } else {
    cert.kind = Certificate::Kind::ExhaustedNoLabeling;
  }
  return cert;
}

Certificate decide_small(const Graph& g) {
  if (g.order() > 12) {
    throw UsageError("decide_small handles orders up to 12, got " +
                     std::to_string(g.order()));
  }
  return search_daml(g, exhaustive_budget());
}

}  // namespace zdag
