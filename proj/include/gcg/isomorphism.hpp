#pragma once

#include <optional>
#include <vector>

#include "gcg/graph.hpp"

namespace gcg {

// Searches for a vertex bijection m with x.adjacent(i, j) == y.adjacent(m[i],
// m[j]) for all i, j.  Backtracking over vertices ordered by invariant class
// (degree, neighbor-degree multiset, distance profile), pruning candidates
// against already-mapped vertices; any returned map is re-verified edge by
// edge.  Guard: both graphs <= 32 vertices (SizeLimitExceeded).
std::optional<std::vector<int>> are_isomorphic(const SimpleGraph& x, const SimpleGraph& y);

}  // namespace gcg
