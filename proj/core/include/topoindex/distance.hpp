#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "topoindex/graph.hpp"

namespace topoindex {

using Distance = std::uint32_t;

/// Unweighted shortest-path lengths from `source`. Unreachable vertices
/// (only possible for unchecked graphs) get `kUnreachable`.
inline constexpr Distance kUnreachable = UINT32_MAX;

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

/// Same as bfs_distances but writes into caller-owned storage, reusing the
/// queue buffer. `out` and `queue` are resized to n.
void bfs_distances_into(const Graph& g, Vertex source, std::vector<Distance>& out,
                        std::vector<Vertex>& queue);

/// Dense all-pairs distances, one BFS per row.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  std::size_t order() const noexcept { return n_; }
  Distance operator()(Vertex u, Vertex v) const noexcept { return data_[std::size_t{u} * n_ + v]; }
  std::span<const Distance> row(Vertex u) const noexcept {
    return {data_.data() + std::size_t{u} * n_, n_};
  }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> data_;
};

/// Vertices grouped by distance from v; entry i holds the sorted layer at distance i.
std::vector<std::vector<Vertex>> layers(const Graph& g, Vertex v);

std::size_t eccentricity(const Graph& g, Vertex v);
std::size_t diameter(const Graph& g);

}  // namespace topoindex
