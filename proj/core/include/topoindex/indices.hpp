#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "topoindex/edge_stats.hpp"
#include "topoindex/graph.hpp"

namespace topoindex {

/// Every index for one graph, computed exactly in a single pass.
struct IndexReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t wiener = 0;
  std::int64_t zagreb_m1 = 0;
  std::int64_t zagreb_m2 = 0;
  std::int64_t pi_v = 0;
  std::int64_t szeged = 0;
  std::int64_t pi_w = 0;
  std::int64_t sz_w = 0;
  std::int64_t triangle_total = 0;
  bool is_bipartite = false;
  std::int64_t diameter = 0;

  friend bool operator==(const IndexReport&, const IndexReport&) = default;
};

IndexReport compute_indices(const Graph& g);

/// Sum of d(u, v) over unordered pairs.
std::int64_t wiener(const Graph& g);
std::int64_t zagreb_m1(const Graph& g);
std::int64_t zagreb_m2(const Graph& g);
std::int64_t pi_v(const Graph& g);
std::int64_t szeged(const Graph& g);
std::int64_t pi_w(const Graph& g);
std::int64_t sz_w(const Graph& g);

// Edge-level sums, for callers that already hold edge_stats(g).
std::int64_t pi_v(std::span<const EdgeStats> stats);
std::int64_t szeged(std::span<const EdgeStats> stats);
std::int64_t pi_w(std::span<const EdgeStats> stats);
std::int64_t sz_w(std::span<const EdgeStats> stats);

/// Contribution of vertex x: over the edges uv with d(x,u) != d(x,v),
/// `weighted` sums deg(u)+deg(v) and `unweighted` counts them.
/// Summed over x these give PI_w and PI_v respectively.
struct VertexContribution {
  Vertex vertex = 0;
  std::int64_t weighted = 0;
  std::int64_t unweighted = 0;
};

/// One BFS row per vertex; never materializes the distance matrix.
std::vector<VertexContribution> vertex_contributions(const Graph& g);

struct Bipartition {
  bool bipartite = false;
  /// Side (0/1) of each vertex when bipartite.
  std::vector<std::uint8_t> coloring;
  /// Closed walk v0 v1 ... vk v0 of odd length when not bipartite.
  std::vector<Vertex> odd_cycle;
};

Bipartition bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

enum class Objective { PiW, PiV, Szeged, SzW, Wiener, M1, M2 };

std::string_view to_string(Objective objective) noexcept;
std::optional<Objective> parse_objective(std::string_view name) noexcept;
std::int64_t select(const IndexReport& report, Objective objective) noexcept;

}  // namespace topoindex
