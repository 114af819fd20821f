#include <random>

#include <gtest/gtest.h>

#include "topoindex/bounds.hpp"
#include "topoindex/error.hpp"
#include "topoindex/extremal.hpp"
#include "topoindex/generators.hpp"
#include "topoindex/indices.hpp"
#include "topoindex/lemmas.hpp"
#include "topoindex/random_graphs.hpp"
#include "topoindex/structure.hpp"

using namespace topoindex;

namespace {

Rational q(std::int64_t a, std::int64_t b = 1) { return make_rational(a, b); }

}  // namespace

TEST(LowerBounds, Examples) {
  const auto k4 = lower_bound_diameter(complete(4));
  EXPECT_EQ(k4.bound_value, q(34));
  EXPECT_EQ(k4.index_value, 72);
  EXPECT_TRUE(k4.holds);
  EXPECT_FALSE(k4.equality);
  EXPECT_TRUE(passed(k4));

  const auto k3 = lower_bound_path(complete(3));
  EXPECT_EQ(k3.bound_value, q(18));
  EXPECT_EQ(k3.index_value, 24);
  EXPECT_FALSE(k3.equality);

  for (std::size_t n = 2; n <= 20; ++n) {
    for (const auto& r : {lower_bound_diameter(path(n)), lower_bound_path(path(n))}) {
      EXPECT_TRUE(r.holds);
      EXPECT_TRUE(r.equality) << r.bound_name << " n=" << n;
      EXPECT_TRUE(r.in_expected_class);
      EXPECT_TRUE(r.matches_expected_class);
    }
  }
}

TEST(TriangleBound, Examples) {
  const auto k4 = upper_bound_triangles(complete(4));
  EXPECT_EQ(k4.bound_value, q(72));
  EXPECT_TRUE(k4.equality);
  EXPECT_TRUE(k4.matches_expected_class);

  const auto c5 = upper_bound_triangles(cycle(5));
  EXPECT_EQ(c5.bound_value, q(125));
  EXPECT_EQ(c5.index_value, 80);
  EXPECT_FALSE(c5.equality);
  EXPECT_TRUE(c5.matches_expected_class);

  EXPECT_TRUE(upper_bound_triangles(complete_multipartite(PartitionSpec({2, 5}))).equality);
  EXPECT_TRUE(upper_bound_triangles(turan(9, 3)).equality);
  EXPECT_FALSE(upper_bound_triangles(turan(7, 3)).equality);
  EXPECT_TRUE(passed(upper_bound_triangles(turan(7, 3))));
}

TEST(GlobalBound, Examples) {
  const auto k222 = upper_bound_global(turan(6, 3));
  EXPECT_EQ(k222.index_value, 384);
  EXPECT_EQ(k222.bound_value, q(384));
  EXPECT_TRUE(k222.equality);
  EXPECT_TRUE(passed(k222));

  const auto k333 = upper_bound_global(turan(9, 3));
  EXPECT_TRUE(k333.equality);
  EXPECT_EQ(k333.index_value, 1944);

  const auto k3 = upper_bound_global(complete(3));
  EXPECT_TRUE(k3.equality);
  EXPECT_TRUE(passed(k3));

  EXPECT_FALSE(upper_bound_global(turan(7, 3)).equality);
  EXPECT_FALSE(upper_bound_global(complete(4)).equality);
}

TEST(Bounds, HoldOnRandomGraphs) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    const auto g = random_connected_graph(2 + i % 30, 0.04 * (i % 20), rng);
    for (const auto& r : all_graph_bounds(g)) EXPECT_TRUE(passed(r)) << r.bound_name;
    for (const auto& e : per_edge_inequalities(g)) EXPECT_TRUE(e.holds());
  }
}

TEST(Bounds, PerEdgeInequalityIsTightOnBalancedTuran) {
  for (const auto& e : per_edge_inequalities(turan(9, 3))) {
    EXPECT_EQ(e.closer_sum, e.closer_limit);
    EXPECT_EQ(e.degree_sum, e.degree_limit);
  }
}

TEST(Bounds, TriangleFloor) {
  const auto f = triangle_floor(6, 12);
  EXPECT_FALSE(f.vacuous);
  EXPECT_EQ(f.value, q(8));
  EXPECT_EQ(triangle_floor(4, 6).value, q(4));
  const auto tree = triangle_floor(5, 4);
  EXPECT_TRUE(tree.vacuous);
  EXPECT_LT(tree.value, 0);
  EXPECT_EQ(tree.effective(), 0);
}

TEST(Bounds, FloorNeverExceedsActualTriangles) {
  for (std::size_t n = 3; n <= 6; ++n) {
    enumerate_connected({.n = n}, [](const Graph& g) {
      const auto r = compute_indices(g);
      EXPECT_LE(triangle_floor(r.n, r.m).effective(), r.triangle_total);
    });
  }
}

TEST(Structure, Recognizers) {
  EXPECT_TRUE(is_path(path(1)));
  EXPECT_TRUE(is_path(path(7)));
  EXPECT_FALSE(is_path(star(4)));
  EXPECT_FALSE(is_path(cycle(5)));
  EXPECT_TRUE(is_path(path(6).relabeled(std::vector<Vertex>{3, 0, 5, 1, 4, 2})));

  EXPECT_EQ(complete_multipartite_parts(turan(7, 3)), (std::vector<std::int64_t>{3, 2, 2}));
  EXPECT_FALSE(complete_multipartite_parts(cycle(5)).has_value());
  EXPECT_TRUE(is_complete_bipartite(star(5)));
  EXPECT_TRUE(is_complete_bipartite(cycle(4)));
  EXPECT_FALSE(is_complete_bipartite(path(4)));
  EXPECT_TRUE(is_balanced_complete_multipartite(complete(5)));
  EXPECT_FALSE(is_balanced_complete_multipartite(turan(7, 3)));
  EXPECT_TRUE(is_balanced_tripartite(turan(6, 3)));
  EXPECT_FALSE(is_balanced_tripartite(turan(8, 4)));
}

TEST(Lemmas, AbcExamples) {
  EXPECT_EQ(lemma_abc(q(1, 3), q(1, 3), q(1, 3)), eight_twenty_sevenths());
  EXPECT_EQ(lemma_abc(q(1, 2), q(1, 4), q(1, 4)), q(9, 32));
  EXPECT_LT(lemma_abc(q(1, 2), q(1, 4), q(1, 4)), eight_twenty_sevenths());
  const auto near_edge = lemma_abc(q(99, 200), q(99, 200), q(1, 100));
  EXPECT_GT(near_edge, q(1, 4));
  EXPECT_LT(near_edge, eight_twenty_sevenths());
  EXPECT_THROW(lemma_abc(q(1, 2), q(1, 2), q(0)), Error);
  EXPECT_THROW(lemma_abc(q(1, 2), q(1, 2), q(1, 2)), Error);
}

TEST(Lemmas, FExamples) {
  const std::vector<Rational> thirds{q(1, 3), q(1, 3), q(1, 3)};
  const std::vector<Rational> quarters(4, q(1, 4));
  const std::vector<Rational> point{q(1), q(0), q(0), q(0)};
  EXPECT_EQ(f_multipart(thirds), q(8, 27));
  EXPECT_EQ(f_multipart(quarters), q(9, 32));
  EXPECT_EQ(f_multipart(point), 0);
  const std::vector<Rational> bad{q(1, 2), q(1, 3)};
  EXPECT_THROW(f_multipart(bad), Error);
}

TEST(Lemmas, FMatchesNormalizedMultipartiteIndex) {
  for (const auto& parts : {std::vector<std::int64_t>{2, 2, 2}, {3, 2, 1}, {4, 1}, {2, 2, 2, 2}}) {
    const PartitionSpec spec(parts);
    const std::int64_t n = spec.order();
    std::vector<Rational> a;
    for (auto p : parts) a.push_back(q(p, n));
    EXPECT_EQ(f_multipart(a) * n * n * n * n, multipartite_piw_closed_form(spec));
  }
}

TEST(Lemmas, ReductionStep) {
  const std::vector<Rational> quarters(4, q(1, 4));
  const auto tight = reduction_step_check(quarters);
  EXPECT_TRUE(tight.holds);
  EXPECT_TRUE(tight.equality);

  const std::vector<Rational> strict{q(4, 10), q(3, 10), q(2, 10), q(1, 10)};
  const auto s = reduction_step_check(strict);
  EXPECT_TRUE(s.holds);
  EXPECT_FALSE(s.equality);

  const std::vector<Rational> zero_tail{q(1, 2), q(1, 4), q(1, 4), q(0)};
  EXPECT_TRUE(reduction_step_check(zero_tail).equality);

  const std::vector<Rational> unsorted{q(1, 10), q(2, 10), q(3, 10), q(4, 10)};
  EXPECT_THROW(reduction_step_check(unsorted), Error);
}

TEST(Lemmas, SquareSum) {
  const std::vector<Rational> pair{q(5), q(2)};
  const auto eq = lemma_squaresum_check(pair, q(2));
  EXPECT_TRUE(eq.holds);
  EXPECT_TRUE(eq.equality);
  const auto strict = lemma_squaresum_check(pair, q(1));
  EXPECT_TRUE(strict.holds);
  EXPECT_FALSE(strict.equality);
  const std::vector<Rational> triple{q(3), q(3), q(3)};
  EXPECT_FALSE(lemma_squaresum_check(triple, q(3)).equality);
  EXPECT_THROW(lemma_squaresum_check(pair, q(3)), Error);
}

TEST(Lemmas, SmallSweep) {
  const auto r = run_lemma_sweep({.samples = 2000, .seed = 42});
  EXPECT_TRUE(r.passed()) << r.first_counterexample.value_or("");
  EXPECT_EQ(r.samples, 2000u);
  EXPECT_LE(r.abc_max, eight_twenty_sevenths());
  EXPECT_LE(r.f_max, eight_twenty_sevenths());
}
