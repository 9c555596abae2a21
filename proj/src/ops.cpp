#include "zdag/ops.hpp"

#include <string>
#include <utility>

#include "zdag/errors.hpp"

namespace zdag {

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<std::pair<int, int>> edge_list;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edge_list.emplace_back(u, v);
    }
  }
  return Graph::build(g.names(), edge_list);
}

Graph copies(int k, const Graph& g) {
  if (k < 1) {
    throw UsageError("copy count must be at least 1, got " + std::to_string(k));
  }
  const int n = g.order();
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(k) * n);
  std::vector<std::pair<int, int>> edge_list;
  const auto base_edges = g.edges();
  edge_list.reserve(static_cast<std::size_t>(k) * base_edges.size());
  for (int i = 0; i < k; ++i) {
    const std::string prefix = "c" + std::to_string(i) + ":";
    for (int v = 0; v < n; ++v) names.push_back(prefix + g.name(v));
    const int base = i * n;
    for (auto [u, v] : base_edges) edge_list.emplace_back(base + u, base + v);
  }
  return Graph::build(std::move(names), edge_list);
}

Graph join(const std::vector<Graph>& parts) {
  if (parts.size() < 2) {
    throw UsageError("join needs at least 2 parts, got " +
                     std::to_string(parts.size()));
  }
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edge_list;
  std::vector<int> offsets;
  int total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    offsets.push_back(total);
    const Graph& p = parts[i];
    const std::string prefix = "p" + std::to_string(i) + ":";
    for (int v = 0; v < p.order(); ++v) names.push_back(prefix + p.name(v));
    for (auto [u, v] : p.edges()) {
      edge_list.emplace_back(total + u, total + v);
    }
    total += p.order();
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (int u = 0; u < parts[i].order(); ++u) {
        for (int v = 0; v < parts[j].order(); ++v) {
          edge_list.emplace_back(offsets[i] + u, offsets[j] + v);
        }
      }
    }
  }
  return Graph::build(std::move(names), edge_list);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) {
    throw UsageError("cartesian product requires nonempty factors");
  }
  const int ng = g.order(), nh = h.order();
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(ng) * nh);
  for (int u = 0; u < ng; ++u) {
    for (int v = 0; v < nh; ++v) {
      names.push_back("(" + g.name(u) + "," + h.name(v) + ")");
    }
  }
  std::vector<std::pair<int, int>> edge_list;
  for (int u = 0; u < ng; ++u) {
    for (auto [v1, v2] : h.edges()) {
      edge_list.emplace_back(u * nh + v1, u * nh + v2);
    }
  }
  for (auto [u1, u2] : g.edges()) {
    for (int v = 0; v < nh; ++v) {
      edge_list.emplace_back(u1 * nh + v, u2 * nh + v);
    }
  }
  return Graph::build(std::move(names), edge_list);
}

}  // namespace zdag
