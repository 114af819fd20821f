#include "topoindex/indices.hpp"

#include <algorithm>

#include "topoindex/checked.hpp"
#include "topoindex/distance.hpp"

namespace topoindex {

namespace {

struct EdgeSums {
  std::int64_t pi_v = 0;
  std::int64_t szeged = 0;
  std::int64_t pi_w = 0;
  std::int64_t sz_w = 0;
};

EdgeSums edge_sums(std::span<const EdgeStats> stats) {
  EdgeSums s;
  for (const EdgeStats& e : stats) {
    const auto closer = e.closer_sum();
    const auto product = checked_mul(e.n_u, e.n_v);
    s.pi_v = checked_add(s.pi_v, closer);
    s.szeged = checked_add(s.szeged, product);
    s.pi_w = checked_add(s.pi_w, checked_mul(e.degree_sum(), closer));
    s.sz_w = checked_add(s.sz_w, checked_mul(e.degree_sum(), product));
  }
  return s;
}

}  // namespace

std::int64_t wiener(const Graph& g) {
  require_connected(g);
  std::vector<Distance> row;
  std::vector<Vertex> queue;
  std::int64_t total = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    bfs_distances_into(g, s, row, queue);
    for (Vertex t = s + 1; t < g.order(); ++t) total = checked_add(total, row[t]);
  }
  return total;
}

std::int64_t zagreb_m1(const Graph& g) {
  require_connected(g);
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(v));
    total = checked_add(total, checked_mul(d, d));
  }
  return total;
}

std::int64_t zagreb_m2(const Graph& g) {
  require_connected(g);
  std::int64_t total = 0;
  for (const Edge& e : g.edges()) {
    total = checked_add(total, checked_mul(static_cast<std::int64_t>(g.degree(e.u)),
                                           static_cast<std::int64_t>(g.degree(e.v))));
  }
  return total;
}

std::int64_t pi_v(std::span<const EdgeStats> stats) { return edge_sums(stats).pi_v; }
std::int64_t szeged(std::span<const EdgeStats> stats) { return edge_sums(stats).szeged; }
std::int64_t pi_w(std::span<const EdgeStats> stats) { return edge_sums(stats).pi_w; }
std::int64_t sz_w(std::span<const EdgeStats> stats) { return edge_sums(stats).sz_w; }

std::int64_t pi_v(const Graph& g) { return pi_v(edge_stats(g)); }
std::int64_t szeged(const Graph& g) { return szeged(edge_stats(g)); }
std::int64_t pi_w(const Graph& g) { return pi_w(edge_stats(g)); }
std::int64_t sz_w(const Graph& g) { return sz_w(edge_stats(g)); }

IndexReport compute_indices(const Graph& g) {
  require_connected(g);
  IndexReport r;
  r.n = static_cast<std::int64_t>(g.order());
  r.m = static_cast<std::int64_t>(g.size());

  const DistanceMatrix dist(g);
  std::vector<EdgeStats> stats;
  stats.reserve(g.size());
  std::int64_t triangle_incidences = 0;
  for (const Edge& e : g.edges()) {
    EdgeStats s{e.u, e.v, static_cast<std::int64_t>(g.degree(e.u)), static_cast<std::int64_t>(g.degree(e.v))};
    const auto du = dist.row(e.u);
    const auto dv = dist.row(e.v);
    for (std::size_t x = 0; x < g.order(); ++x) {
      s.n_u += du[x] < dv[x];
      s.n_v += dv[x] < du[x];
    }
    s.triangles = common_neighbors(g, e.u, e.v);
    triangle_incidences += s.triangles;
    stats.push_back(s);

    r.zagreb_m2 = checked_add(r.zagreb_m2, checked_mul(s.deg_u, s.deg_v));
  }
  const EdgeSums sums = edge_sums(stats);
  r.pi_v = sums.pi_v;
  r.szeged = sums.szeged;
  r.pi_w = sums.pi_w;
  r.sz_w = sums.sz_w;
  r.triangle_total = triangle_incidences / 3;

  for (Vertex v = 0; v < g.order(); ++v) {
    const auto d = static_cast<std::int64_t>(g.degree(v));
    r.zagreb_m1 = checked_add(r.zagreb_m1, d * d);
    const auto row = dist.row(v);
    for (Vertex t = v + 1; t < g.order(); ++t) {
      r.wiener = checked_add(r.wiener, row[t]);
      r.diameter = std::max<std::int64_t>(r.diameter, row[t]);
    }
  }
  r.is_bipartite = is_bipartite(g);
  return r;
}

std::vector<VertexContribution> vertex_contributions(const Graph& g) {
  require_connected(g);
  std::vector<VertexContribution> out;
  out.reserve(g.order());
  std::vector<Distance> row;
  std::vector<Vertex> queue;
  for (Vertex x = 0; x < g.order(); ++x) {
    bfs_distances_into(g, x, row, queue);
    VertexContribution c{x, 0, 0};
    for (const Edge& e : g.edges()) {
      if (row[e.u] == row[e.v]) continue;
      c.unweighted += 1;
      c.weighted = checked_add(c.weighted, static_cast<std::int64_t>(g.degree(e.u) + g.degree(e.v)));
    }
    out.push_back(c);
  }
  return out;
}

Bipartition bipartition(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::uint8_t kUncolored = 2;
  Bipartition out;
  out.coloring.assign(n, kUncolored);
  std::vector<Vertex> parent(n, 0);
  std::vector<Distance> depth(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);

  for (Vertex root = 0; root < n; ++root) {
    if (out.coloring[root] != kUncolored) continue;
    out.coloring[root] = 0;
    parent[root] = root;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (out.coloring[y] == kUncolored) {
          out.coloring[y] = static_cast<std::uint8_t>(1 - out.coloring[x]);
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        } else if (out.coloring[y] == out.coloring[x]) {
          // x and y sit at equal depth parity: walk both tree paths up to the
          // common ancestor; the two paths plus edge xy form an odd cycle.
          std::vector<Vertex> left{x};
          std::vector<Vertex> right{y};
          Vertex a = x;
          Vertex b = y;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          out.odd_cycle.assign(left.begin(), left.end());
          out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
          out.bipartite = false;
          out.coloring.clear();
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  return out;
}

bool is_bipartite(const Graph& g) { return bipartition(g).bipartite; }

std::string_view to_string(Objective objective) noexcept {
  switch (objective) {
    case Objective::PiW: return "pi_w";
    case Objective::PiV: return "pi_v";
    case Objective::Szeged: return "szeged";
    case Objective::SzW: return "sz_w";
    case Objective::Wiener: return "wiener";
    case Objective::M1: return "m1";
    case Objective::M2: return "m2";
  }
  return "unknown";
}

std::optional<Objective> parse_objective(std::string_view name) noexcept {
  for (auto o : {Objective::PiW, Objective::PiV, Objective::Szeged, Objective::SzW, Objective::Wiener,
                 Objective::M1, Objective::M2}) {
    if (to_string(o) == name) return o;
  }
  return std::nullopt;
}

std::int64_t select(const IndexReport& report, Objective objective) noexcept {
  switch (objective) {
    case Objective::PiW: return report.pi_w;
    case Objective::PiV: return report.pi_v;
    case Objective::Szeged: return report.szeged;
    case Objective::SzW: return report.sz_w;
    case Objective::Wiener: return report.wiener;
    case Objective::M1: return report.zagreb_m1;
    case Objective::M2: return report.zagreb_m2;
  }
  return 0;
}

}  // namespace topoindex
