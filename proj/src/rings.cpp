#include "zdag/rings.hpp"

#include <algorithm>
#include <numeric>

#include "zdag/errors.hpp"

namespace zdag {

Modulus::Modulus(std::uint64_t n) : value(n) {
  if (n < 2) {
    throw UsageError("modulus must be at least 2, got " + std::to_string(n));
  }
}

std::uint64_t euler_totient(std::uint64_t n) {
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<std::uint64_t> zero_divisors(Modulus m) {
  const std::uint64_t n = m.value;
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(n - euler_totient(n) - 1));
  for (std::uint64_t x = 2; x < n; ++x) {
    if (std::gcd(x, n) > 1) out.push_back(x);
  }
  return out;
}

Graph zero_divisor_graph(Modulus m, std::uint64_t vertex_cap) {
  const std::uint64_t n = m.value;
  const std::uint64_t count = n - euler_totient(n) - 1;
  if (count > vertex_cap) {
    throw ResourceError("zero-divisor graph of Z_" + std::to_string(n) +
                        " has " + std::to_string(count) +
                        " vertices, over the cap of " +
                        std::to_string(vertex_cap));
  }
  const std::vector<std::uint64_t> elems = zero_divisors(m);
  const int v = static_cast<int>(elems.size());
  std::vector<std::string> names;
  names.reserve(elems.size());
  for (std::uint64_t x : elems) names.push_back(std::to_string(x));
  std::vector<std::pair<int, int>> edge_list;
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) {
      unsigned __int128 prod =
          static_cast<unsigned __int128>(elems[i]) * elems[j];
      if (prod % n == 0) edge_list.emplace_back(i, j);
    }
  }
  return Graph::build(std::move(names), edge_list);
}

StructuralClass empty_class() {
  return {StructuralClass::Kind::Empty, 0, 0};
}
StructuralClass complete_class(int k) {
  return {StructuralClass::Kind::Complete, k, 0};
}
StructuralClass star_class(int center, int leaves) {
  return {StructuralClass::Kind::Star, center, leaves};
}
StructuralClass bipartite_class(int a, int b) {
  return {StructuralClass::Kind::CompleteBipartite, a, b};
}
StructuralClass path_class(int k) {
  return {StructuralClass::Kind::Path, k, 0};
}

std::string StructuralClass::describe(const Graph& g) const {
  switch (kind) {
    case Kind::Empty:
      return "Empty";
    case Kind::Complete:
      return "Complete(K_" + std::to_string(a) + ")";
    case Kind::Star:
      return "Star(center \"" + g.name(a) + "\", " + std::to_string(b) +
             " leaves)";
    case Kind::CompleteBipartite:
      return "CompleteBipartite(K_{" + std::to_string(a) + "," +
             std::to_string(b) + "})";
    case Kind::Path:
      return "Path(P_" + std::to_string(a) + ")";
    case Kind::Other:
      return "Other";
  }
  return "Other";
}

StructuralClass structural_class(const Graph& g) {
  const int n = g.order();
  if (n == 0) return empty_class();

  bool complete = true;
  for (int v = 0; v < n && complete; ++v) {
    complete = g.degree(v) == n - 1;
  }
  if (complete) return complete_class(n);

  if (n >= 3) {
    int center = -1;
    bool star = true;
    for (int v = 0; v < n && star; ++v) {
      int d = g.degree(v);
      if (d == n - 1) {
        if (center != -1) star = false;
        center = v;
      } else if (d != 1) {
        star = false;
      }
    }
    if (star && center != -1) return star_class(center, n - 1);
  }

  if (n >= 2 && g.size() > 0) {
    const std::vector<int>& side_b = g.neighbors(0);
    if (!side_b.empty()) {
      std::vector<int> side_a;
      std::vector<char> in_b(n, 0);
      for (int v : side_b) in_b[v] = 1;
      for (int v = 0; v < n; ++v) {
        if (!in_b[v]) side_a.push_back(v);
      }
      bool bipartite = true;
      for (int v : side_a) {
        if (g.neighbors(v) != side_b) {
          bipartite = false;
          break;
        }
      }
      if (bipartite) {
        for (int v : side_b) {
          if (g.neighbors(v) != side_a) {
            bipartite = false;
            break;
          }
        }
      }
      if (bipartite) {
        int a = static_cast<int>(side_a.size());
        int b = static_cast<int>(side_b.size());
        return bipartite_class(std::min(a, b), std::max(a, b));
      }
    }
  }

  if (n >= 2) {
    int ends = 0, end = -1;
    bool path = true;
    for (int v = 0; v < n && path; ++v) {
      int d = g.degree(v);
      if (d == 1) {
        ++ends;
        end = v;
      } else if (d != 2) {
        path = false;
      }
    }
    if (path && ends == 2) {
      // walk from one endpoint; a single path visits every vertex
      std::vector<char> visited(n, 0);
      int cur = end, prev = -1, steps = 1;
      visited[cur] = 1;
      while (true) {
        int next = -1;
        for (int u : g.neighbors(cur)) {
          if (u != prev) next = u;
        }
        if (next == -1 || visited[next]) break;
        visited[next] = 1;
        prev = cur;
        cur = next;
        ++steps;
      }
      if (steps == n) return path_class(n);
    }
  }

  return {StructuralClass::Kind::Other, 0, 0};
}

}  // namespace zdag
