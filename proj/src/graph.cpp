#include "zdag/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "zdag/errors.hpp"

namespace zdag {

Graph Graph::build(std::vector<std::string> names,
                   const std::vector<std::pair<int, int>>& edge_list) {
  Graph g;
  const int n = static_cast<int>(names.size());
  {
    std::unordered_set<std::string> seen;
    for (const auto& name : names) {
      if (!seen.insert(name).second) {
        throw UsageError("duplicate vertex name \"" + name + "\"");
      }
    }
  }
  g.names_ = std::move(names);
  g.adj_.assign(n, {});
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw UsageError("edge endpoint out of range: (" + std::to_string(u) +
                       ", " + std::to_string(v) + ") in graph of order " +
                       std::to_string(n));
    }
    if (u == v) {
      throw UsageError("loop edge at vertex " + std::to_string(u));
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.edge_count_ += static_cast<std::int64_t>(nbrs.size());
  }
  g.edge_count_ /= 2;
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw UsageError("vertex id " + std::to_string(v) +
                     " out of range in graph of order " +
                     std::to_string(order()));
  }
}

const std::string& Graph::name(int v) const {
  check_vertex(v);
  return names_[v];
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[v].size());
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> degs;
  degs.reserve(adj_.size());
  for (const auto& nbrs : adj_) degs.push_back(static_cast<int>(nbrs.size()));
  std::sort(degs.begin(), degs.end(), std::greater<int>());
  return degs;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::permuted(const std::vector<int>& new_to_old) const {
  const int n = order();
  if (static_cast<int>(new_to_old.size()) != n) {
    throw UsageError("permutation size does not match graph order");
  }
  std::vector<int> old_to_new(n, -1);
  for (int i = 0; i < n; ++i) {
    int o = new_to_old[i];
    if (o < 0 || o >= n || old_to_new[o] != -1) {
      throw UsageError("new_to_old is not a permutation of 0.." +
                       std::to_string(n - 1));
    }
    old_to_new[o] = i;
  }
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = names_[new_to_old[i]];
  std::vector<std::pair<int, int>> edge_list;
  edge_list.reserve(static_cast<std::size_t>(edge_count_));
  for (auto [u, v] : edges()) {
    edge_list.emplace_back(old_to_new[u], old_to_new[v]);
  }
  return Graph::build(std::move(names), edge_list);
}

nlohmann::json Graph::to_json() const {
  nlohmann::json j;
  j["order"] = order();
  j["names"] = names_;
  auto& je = j["edges"] = nlohmann::json::array();
  for (auto [u, v] : edges()) je.push_back({u, v});
  return j;
}

Graph Graph::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("names") ||
      !j.contains("edges")) {
    throw ValidationError("graph JSON must have order, names and edges");
  }
  if (!j["order"].is_number_integer() || j["order"].get<std::int64_t>() < 0) {
    throw ValidationError("graph JSON: order must be a nonnegative integer");
  }
  const auto n = j["order"].get<std::int64_t>();
  if (!j["names"].is_array() ||
      static_cast<std::int64_t>(j["names"].size()) != n) {
    throw ValidationError("graph JSON: names must be an array of length order");
  }
  std::vector<std::string> names;
  names.reserve(j["names"].size());
  for (const auto& e : j["names"]) {
    if (!e.is_string()) {
      throw ValidationError("graph JSON: names entries must be strings");
    }
    names.push_back(e.get<std::string>());
  }
  if (!j["edges"].is_array()) {
    throw ValidationError("graph JSON: edges must be an array");
  }
  std::vector<std::pair<int, int>> edge_list;
  edge_list.reserve(j["edges"].size());
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ValidationError("graph JSON: each edge must be a pair of ids");
    }
    edge_list.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return build(std::move(names), edge_list);
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string Graph::to_dot() const {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < order(); ++v) {
    os << "  " << v << " [label=\"" << dot_escape(names_[v]) << "\"];\n";
  }
  for (auto [u, v] : edges()) {
    os << "  " << u << " -- " << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::optional<TwinPair> find_twin_pair(const Graph& g) {
  const int n = g.order();
  std::unordered_map<std::size_t, std::vector<int>> buckets;
  for (int v = 0; v < n; ++v) {
    std::size_t h = 1469598103934665603ull;
    for (int u : g.neighbors(v)) {
      h ^= static_cast<std::size_t>(u) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    buckets[h].push_back(v);
  }
  std::optional<TwinPair> best;
  for (const auto& [h, members] : buckets) {
    if (members.size() < 2) continue;
    // hash collisions are possible, so confirm with exact comparisons
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        int u = members[i], v = members[j];
        if (g.neighbors(u) != g.neighbors(v)) continue;
        TwinPair cand{std::min(u, v), std::max(u, v)};
        if (!best || cand.u < best->u ||
            (cand.u == best->u && cand.v < best->v)) {
          best = cand;
        }
      }
    }
  }
  return best;
}

}  // namespace zdag
