#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "topoindex/graph.hpp"

namespace topoindex {

/// Per-edge record feeding every index. For edge uv (u < v), `n_u` counts
/// vertices strictly closer to u than to v, `n_v` symmetrically; vertices at
/// equal distance count for neither. `triangles` is |N(u) ∩ N(v)|.
struct EdgeStats {
  Vertex u = 0;
  Vertex v = 0;
  std::int64_t deg_u = 0;
  std::int64_t deg_v = 0;
  std::int64_t n_u = 0;
  std::int64_t n_v = 0;
  std::int64_t triangles = 0;

  std::int64_t degree_sum() const noexcept { return deg_u + deg_v; }
  std::int64_t closer_sum() const noexcept { return n_u + n_v; }
};

/// Graphs up to this order get a full distance matrix; larger ones run two
/// BFS per edge to keep memory at O(n).
inline constexpr std::size_t kDefaultMatrixThreshold = 4096;

/// One record per edge in Graph::edges() order. Requires a connected graph.
std::vector<EdgeStats> edge_stats(const Graph& g, std::size_t matrix_threshold = kDefaultMatrixThreshold);

/// |N(u) ∩ N(v)| by merging sorted neighbor lists.
std::int64_t common_neighbors(const Graph& g, Vertex u, Vertex v);

std::int64_t triangle_total(const Graph& g);

}  // namespace topoindex
