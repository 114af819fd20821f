#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace topoindex {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored in compressed rows with every neighbor list sorted,
/// so triangle counts reduce to sorted-list intersections. Edges are kept
/// normalized (u < v) in lexicographic order.
///
/// `from_edges` is the checked entry point and rejects disconnected input.
/// `unchecked_from_edges` still enforces simplicity but accepts any
/// connectivity; it exists for enumeration and file ingestion, and the
/// result reports `is_connected()` so index routines can refuse it.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph unchecked_from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const noexcept { return edges_.size(); }

  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  std::span<const Edge> edges() const noexcept { return edges_; }

  bool has_edge(Vertex u, Vertex v) const noexcept;
  bool is_connected() const noexcept { return connected_; }

  /// Relabels vertex v to perm[v]. perm must be a permutation of 0..n-1.
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
  std::vector<Edge> edges_;
  bool connected_ = false;
};

/// Throws Error(Disconnected) unless g is connected and nonempty.
void require_connected(const Graph& g);

}  // namespace topoindex
