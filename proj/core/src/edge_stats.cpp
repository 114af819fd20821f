#include "topoindex/edge_stats.hpp"

#include "topoindex/distance.hpp"
#include "topoindex/error.hpp"

namespace topoindex {

std::int64_t common_neighbors(const Graph& g, Vertex u, Vertex v) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::int64_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

namespace {

void count_closer(std::span<const Distance> from_u, std::span<const Distance> from_v, EdgeStats& s) {
  std::int64_t nu = 0;
  std::int64_t nv = 0;
  for (std::size_t x = 0; x < from_u.size(); ++x) {
    nu += from_u[x] < from_v[x];
    nv += from_v[x] < from_u[x];
  }
  s.n_u = nu;
  s.n_v = nv;
}

}  // namespace

std::vector<EdgeStats> edge_stats(const Graph& g, std::size_t matrix_threshold) {
  require_connected(g);
  std::vector<EdgeStats> out;
  out.reserve(g.size());
  for (const Edge& e : g.edges()) {
    EdgeStats s;
    s.u = e.u;
    s.v = e.v;
    s.deg_u = static_cast<std::int64_t>(g.degree(e.u));
    s.deg_v = static_cast<std::int64_t>(g.degree(e.v));
    s.triangles = common_neighbors(g, e.u, e.v);
    out.push_back(s);
  }

  if (g.order() <= matrix_threshold) {
    const DistanceMatrix dist(g);
    for (EdgeStats& s : out) count_closer(dist.row(s.u), dist.row(s.v), s);
  } else {
    std::vector<Distance> from_u;
    std::vector<Distance> from_v;
    std::vector<Vertex> queue;
    for (EdgeStats& s : out) {
      bfs_distances_into(g, s.u, from_u, queue);
      bfs_distances_into(g, s.v, from_v, queue);
      count_closer(from_u, from_v, s);
    }
  }
  return out;
}

std::int64_t triangle_total(const Graph& g) {
  std::int64_t sum = 0;
  for (const Edge& e : g.edges()) sum += common_neighbors(g, e.u, e.v);
  return sum / 3;
}

}  // namespace topoindex
