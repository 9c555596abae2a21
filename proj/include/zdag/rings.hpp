#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zdag/graph.hpp"

namespace zdag {

/// Ring size for Z_n. Valid from 2 upward.
struct Modulus {
  std::uint64_t value;
  explicit Modulus(std::uint64_t n);
};

inline constexpr std::uint64_t kDefaultVertexCap = 1000000;

std::uint64_t euler_totient(std::uint64_t n);

/// Nonzero zero divisors of Z_n in increasing order, i.e. the x in
/// 1..n-1 with gcd(x, n) > 1. There are n - totient(n) - 1 of them.
std::vector<std::uint64_t> zero_divisors(Modulus m);

/// Zero-divisor graph of Z_n. Vertices are the nonzero zero divisors,
/// named by decimal residue in increasing order; u ~ v iff u != v and
/// u*v = 0 (mod n). Elements squaring to zero never produce loops.
/// Throws ResourceError when the vertex count exceeds vertex_cap.
Graph zero_divisor_graph(Modulus m, std::uint64_t vertex_cap = kDefaultVertexCap);

/// Recognized shapes, checked in this order; the first match wins.
struct StructuralClass {
  enum class Kind { Empty, Complete, Star, CompleteBipartite, Path, Other };
  Kind kind = Kind::Other;
  int a = 0;  ///< Complete: order; Star: center id; CompleteBipartite: small side; Path: order
  int b = 0;  ///< Star: leaf count; CompleteBipartite: large side
  bool operator==(const StructuralClass&) const = default;
  std::string describe(const Graph& g) const;
};

StructuralClass structural_class(const Graph& g);

StructuralClass empty_class();
StructuralClass complete_class(int k);
StructuralClass star_class(int center, int leaves);
StructuralClass bipartite_class(int a, int b);
StructuralClass path_class(int k);

}  // namespace zdag
