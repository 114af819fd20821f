#include "topoindex/distance.hpp"

#include <algorithm>

#include "topoindex/error.hpp"

namespace topoindex {

void bfs_distances_into(const Graph& g, Vertex source, std::vector<Distance>& out,
                        std::vector<Vertex>& queue) {
  const std::size_t n = g.order();
  if (source >= n) throw Error(ErrorCode::VertexOutOfRange, "BFS source " + std::to_string(source));
  out.assign(n, kUnreachable);
  queue.resize(n);
  std::size_t head = 0;
  std::size_t tail = 0;
  queue[tail++] = source;
  out[source] = 0;
  while (head < tail) {
    const Vertex x = queue[head++];
    const Distance next = out[x] + 1;
    for (Vertex y : g.neighbors(x)) {
      if (out[y] == kUnreachable) {
        out[y] = next;
        queue[tail++] = y;
      }
    }
  }
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  std::vector<Distance> out;
  std::vector<Vertex> queue;
  bfs_distances_into(g, source, out, queue);
  return out;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()), data_(n_ * n_) {
  std::vector<Distance> row;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n_; ++s) {
    bfs_distances_into(g, s, row, queue);
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(std::size_t{s} * n_));
  }
}

std::vector<std::vector<Vertex>> layers(const Graph& g, Vertex v) {
  require_connected(g);
  const auto dist = bfs_distances(g, v);
  const Distance ecc = *std::max_element(dist.begin(), dist.end());
  std::vector<std::vector<Vertex>> out(ecc + 1);
  for (Vertex x = 0; x < dist.size(); ++x) out[dist[x]].push_back(x);
  return out;
}

std::size_t eccentricity(const Graph& g, Vertex v) {
  require_connected(g);
  const auto dist = bfs_distances(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

std::size_t diameter(const Graph& g) {
  require_connected(g);
  std::vector<Distance> row;
  std::vector<Vertex> queue;
  Distance best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    bfs_distances_into(g, s, row, queue);
    best = std::max(best, *std::max_element(row.begin(), row.end()));
  }
  return best;
}

}  // namespace topoindex
