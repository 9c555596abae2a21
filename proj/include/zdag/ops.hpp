#pragma once

#include <vector>

#include "zdag/graph.hpp"

namespace zdag {

/// Complement on the same vertex set, names preserved.
Graph complement(const Graph& g);

/// k disjoint copies of g; copy i prefixes its names with "c{i}:".
/// Requires k >= 1.
Graph copies(int k, const Graph& g);

/// Join of two or more disjoint parts: each part keeps its internal
/// edges and every cross-part pair becomes an edge. Part i prefixes its
/// names with "p{i}:". Parts of order 0 are permitted.
Graph join(const std::vector<Graph>& parts);

/// Cartesian product. Vertex (u, v) has id u * h.order() + v and name
/// "({g name},{h name})"; (u,v) ~ (u',v') iff u = u' and v ~ v' in h,
/// or v = v' and u ~ u' in g. Requires both factors nonempty.
Graph cartesian_product(const Graph& g, const Graph& h);

}  // namespace zdag
