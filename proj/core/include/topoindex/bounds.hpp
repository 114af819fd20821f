#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "topoindex/graph.hpp"
#include "topoindex/indices.hpp"
#include "topoindex/rational.hpp"

namespace topoindex {

enum class BoundDirection { Lower, Upper };

/// Outcome of checking one bound on one graph. `holds` and `equality` are
/// decided exactly. `in_expected_class` says whether the graph belongs to the
/// family where the bound is known to be tight. `matches_expected_class` is
/// true when equality occurs exactly if the graph is in that family.
struct BoundReport {
  std::string bound_name;
  BoundDirection direction = BoundDirection::Lower;
  Rational bound_value;
  std::int64_t index_value = 0;
  bool holds = false;
  bool equality = false;
  std::string expected_equality_class;
  bool in_expected_class = false;
  bool matches_expected_class = false;
};

// PI_w ≥ 4d² − 4d − 2 + 6m; equality exactly on paths with n ≥ 2.
BoundReport lower_bound_diameter(const Graph& g);
BoundReport lower_bound_diameter(const Graph& g, const IndexReport& indices);

// PI_w ≥ n(4n − 6); equality exactly on paths with n ≥ 2.
BoundReport lower_bound_path(const Graph& g);
BoundReport lower_bound_path(const Graph& g, const IndexReport& indices);

// PI_w ≤ n²m − 9t²/m, compared as m·PI_w ≤ n²m² − 9t². Equality on complete
// bipartite graphs (t = 0) and balanced complete multipartite graphs (t > 0).
// With m = 0 (K_1) the bound is taken as 0 and K_1 = T_{1,1} is in class.
BoundReport upper_bound_triangles(const Graph& g);
BoundReport upper_bound_triangles(const Graph& g, const IndexReport& indices);

// PI_w ≤ (8/27)n⁴, compared as 27·PI_w ≤ 8n⁴. Equality iff 3 | n and G ≅ K_{n/3,n/3,n/3}.
BoundReport upper_bound_global(const Graph& g);
BoundReport upper_bound_global(const Graph& g, const IndexReport& indices);

/// The four graph bounds above, in declaration order, from one index pass.
std::array<BoundReport, 4> all_graph_bounds(const Graph& g);
std::array<BoundReport, 4> all_graph_bounds(const Graph& g, const IndexReport& indices);

/// Whether the report is consistent: the bound holds and equality happens
/// exactly on the expected class.
inline bool passed(const BoundReport& r) { return r.holds && r.matches_expected_class; }

/// n_u + n_v ≤ n − t(e) and deg u + deg v ≤ n + t(e) for one edge.
struct EdgeInequality {
  Vertex u = 0;
  Vertex v = 0;
  std::int64_t closer_sum = 0;
  std::int64_t closer_limit = 0;
  std::int64_t degree_sum = 0;
  std::int64_t degree_limit = 0;

  bool closer_holds() const noexcept { return closer_sum <= closer_limit; }
  bool degree_holds() const noexcept { return degree_sum <= degree_limit; }
  bool holds() const noexcept { return closer_holds() && degree_holds(); }
};

std::vector<EdgeInequality> per_edge_inequalities(const Graph& g);

/// (4m − n²)m / (3n): lower bound on the triangle count of any graph with n
/// vertices and m edges. Vacuous when negative.
struct TriangleFloor {
  Rational value;
  bool vacuous = false;
  /// max(value, 0)
  Rational effective() const { return vacuous ? Rational(0) : value; }
};

TriangleFloor triangle_floor(std::int64_t n, std::int64_t m);

}  // namespace topoindex
