#include "topoindex/graph.hpp"

#include <algorithm>
#include <string>

#include "topoindex/error.hpp"

namespace topoindex {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::InvalidR: return "InvalidR";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool bfs_reaches_all(const std::vector<std::size_t>& offsets, const std::vector<Vertex>& adjacency,
                     std::size_t n) {
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(0);
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (std::size_t i = offsets[x]; i < offsets[x + 1]; ++i) {
      const Vertex y = adjacency[i];
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return queue.size() == n;
}

}  // namespace

Graph Graph::unchecked_from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw Error(ErrorCode::SizeTooSmall, "graph needs at least one vertex");
  if (n > std::size_t{UINT32_MAX}) throw Error(ErrorCode::TooLarge, "vertex count exceeds 32-bit labels");

  Graph g;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") with n=" + std::to_string(n));
    }
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "loop at vertex " + std::to_string(e.u));
    g.edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ") listed twice");
  }

  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in edge order leaves each row sorted:
  // row x receives its smaller neighbors (as v) before its larger ones (as u).
  for (const Edge& e : g.edges_) g.adjacency_[cursor[e.v]++] = e.u;
  for (const Edge& e : g.edges_) g.adjacency_[cursor[e.u]++] = e.v;
  g.connected_ = bfs_reaches_all(g.offsets_, g.adjacency_, n);
  return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g = unchecked_from_edges(n, edges);
  require_connected(g);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= order() || v >= order()) return false;
  auto row = neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (const Edge& e : edges_) mapped.push_back({perm[e.u], perm[e.v]});
  Graph g = unchecked_from_edges(order(), mapped);
  return g;
}

void require_connected(const Graph& g) {
  if (g.order() == 0 || !g.is_connected()) {
    throw Error(ErrorCode::Disconnected, "graph on " + std::to_string(g.order()) + " vertices is not connected");
  }
}

}  // namespace topoindex
