#include "topoindex/structure.hpp"

#include <algorithm>
#include <functional>

namespace topoindex {

bool is_path(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0 || !g.is_connected() || g.size() != n - 1) return false;
  if (n == 1) return true;
  std::size_t leaves = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto d = g.degree(v);
    if (d > 2) return false;
    leaves += d == 1;
  }
  return leaves == 2;
}

std::optional<std::vector<std::int64_t>> complete_multipartite_parts(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return std::nullopt;
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> part_of(n, kUnassigned);
  std::vector<std::int64_t> sizes;
  for (Vertex v = 0; v < n; ++v) {
    if (part_of[v] != kUnassigned) continue;
    // v's part is v plus all its non-neighbors.
    const std::size_t id = sizes.size();
    std::int64_t size = 0;
    for (Vertex x = 0; x < n; ++x) {
      if (x == v || !g.has_edge(v, x)) {
        if (part_of[x] != kUnassigned) return std::nullopt;
        part_of[x] = id;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  // Within a part no edges, across parts every edge.
  std::int64_t expected_edges = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (std::size_t j = i + 1; j < sizes.size(); ++j) expected_edges += sizes[i] * sizes[j];
  }
  for (const Edge& e : g.edges()) {
    if (part_of[e.u] == part_of[e.v]) return std::nullopt;
  }
  if (static_cast<std::int64_t>(g.size()) != expected_edges) return std::nullopt;
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

bool is_complete_bipartite(const Graph& g) {
  const auto parts = complete_multipartite_parts(g);
  return parts && parts->size() == 2;
}

bool is_balanced_complete_multipartite(const Graph& g) {
  const auto parts = complete_multipartite_parts(g);
  return parts && parts->front() == parts->back();
}

bool is_balanced_tripartite(const Graph& g) {
  const auto parts = complete_multipartite_parts(g);
  return parts && parts->size() == 3 && parts->front() == parts->back();
}

}  // namespace topoindex
