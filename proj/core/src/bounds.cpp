#include "topoindex/bounds.hpp"

#include "topoindex/edge_stats.hpp"
#include "topoindex/error.hpp"
#include "topoindex/structure.hpp"

namespace topoindex {

namespace {

__extension__ using Wide = __int128;

void finish(BoundReport& r, Wide index_side, Wide bound_side) {
  r.holds = r.direction == BoundDirection::Lower ? index_side >= bound_side : index_side <= bound_side;
  r.equality = index_side == bound_side;
  r.matches_expected_class = r.equality == r.in_expected_class;
}

}  // namespace

BoundReport lower_bound_diameter(const Graph& g, const IndexReport& ix) {
  BoundReport r;
  r.bound_name = "lower_bound_diameter";
  r.direction = BoundDirection::Lower;
  r.expected_equality_class = "path P_n, n >= 2";
  const std::int64_t d = ix.diameter;
  const std::int64_t bound = 4 * d * d - 4 * d - 2 + 6 * ix.m;
  r.bound_value = make_rational(bound);
  r.index_value = ix.pi_w;
  r.in_expected_class = ix.n >= 2 && is_path(g);
  finish(r, ix.pi_w, bound);
  return r;
}

BoundReport lower_bound_path(const Graph& g, const IndexReport& ix) {
  BoundReport r;
  r.bound_name = "lower_bound_path";
  r.direction = BoundDirection::Lower;
  r.expected_equality_class = "path P_n, n >= 2";
  const Wide bound = Wide{ix.n} * (4 * Wide{ix.n} - 6);
  r.bound_value = make_rational(static_cast<std::int64_t>(bound));
  r.index_value = ix.pi_w;
  r.in_expected_class = ix.n >= 2 && is_path(g);
  finish(r, ix.pi_w, bound);
  return r;
}

BoundReport upper_bound_triangles(const Graph& g, const IndexReport& ix) {
  BoundReport r;
  r.bound_name = "upper_bound_triangles";
  r.direction = BoundDirection::Upper;
  r.index_value = ix.pi_w;
  const Wide n = ix.n;
  const Wide m = ix.m;
  const Wide t = ix.triangle_total;
  if (ix.triangle_total == 0) {
    r.expected_equality_class = "complete bipartite K_{a,b} (t = 0)";
    r.in_expected_class = is_complete_bipartite(g) || ix.n == 1;
  } else {
    r.expected_equality_class = "balanced Turan graph T_{n,r} with r | n (t > 0)";
    r.in_expected_class = is_balanced_complete_multipartite(g);
  }
  if (ix.m == 0) {
    r.bound_value = 0;
    finish(r, ix.pi_w, 0);
    return r;
  }
  // n²m − 9t²/m
  r.bound_value = make_rational(ix.n) * ix.n * ix.m - Rational(make_rational(9) * ix.triangle_total *
                                                               ix.triangle_total / ix.m);
  finish(r, m * ix.pi_w, n * n * m * m - 9 * t * t);
  return r;
}

BoundReport upper_bound_global(const Graph& g, const IndexReport& ix) {
  BoundReport r;
  r.bound_name = "upper_bound_global";
  r.direction = BoundDirection::Upper;
  r.expected_equality_class = "K_{n/3,n/3,n/3} with 3 | n";
  const Wide n = ix.n;
  const Wide n4 = n * n * n * n;
  r.bound_value = Rational(make_rational(8) * static_cast<std::int64_t>(n4) / 27);
  r.index_value = ix.pi_w;
  r.in_expected_class = ix.n % 3 == 0 && is_balanced_tripartite(g);
  finish(r, 27 * Wide{ix.pi_w}, 8 * n4);
  return r;
}

BoundReport lower_bound_diameter(const Graph& g) { return lower_bound_diameter(g, compute_indices(g)); }
BoundReport lower_bound_path(const Graph& g) { return lower_bound_path(g, compute_indices(g)); }
BoundReport upper_bound_triangles(const Graph& g) { return upper_bound_triangles(g, compute_indices(g)); }
BoundReport upper_bound_global(const Graph& g) { return upper_bound_global(g, compute_indices(g)); }

std::array<BoundReport, 4> all_graph_bounds(const Graph& g, const IndexReport& ix) {
  return {lower_bound_diameter(g, ix), lower_bound_path(g, ix), upper_bound_triangles(g, ix),
          upper_bound_global(g, ix)};
}

std::array<BoundReport, 4> all_graph_bounds(const Graph& g) { return all_graph_bounds(g, compute_indices(g)); }

std::vector<EdgeInequality> per_edge_inequalities(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.order());
  std::vector<EdgeInequality> out;
  out.reserve(g.size());
  for (const EdgeStats& s : edge_stats(g)) {
    out.push_back({s.u, s.v, s.closer_sum(), n - s.triangles, s.degree_sum(), n + s.triangles});
  }
  return out;
}

TriangleFloor triangle_floor(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 0 || m > n * (n - 1) / 2) {
    throw Error(ErrorCode::DomainError, "triangle floor needs n >= 1 and 0 <= m <= n(n-1)/2");
  }
  TriangleFloor out;
  out.value = Rational(make_rational(4 * m - n * n) * m / (3 * n));
  out.vacuous = out.value < 0;
  return out;
}

}  // namespace topoindex
