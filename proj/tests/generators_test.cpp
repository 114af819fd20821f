#include <algorithm>
#include <functional>

#include <gtest/gtest.h>

#include "topoindex/edge_stats.hpp"
#include "topoindex/error.hpp"
#include "topoindex/generators.hpp"
#include "topoindex/indices.hpp"
#include "topoindex/structure.hpp"

using namespace topoindex;

namespace {

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < g.order(); ++v) d.push_back(g.degree(v));
  std::sort(d.rbegin(), d.rend());
  return d;
}

void for_each_partition(std::int64_t n, std::int64_t max_part, std::vector<std::int64_t>& cur,
                        const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  if (n == 0) {
    visit(cur);
    return;
  }
  for (std::int64_t p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    for_each_partition(n - p, p, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

TEST(Generators, Families) {
  EXPECT_EQ(path(2).size(), 1u);
  EXPECT_EQ(degrees(star(4)), (std::vector<std::size_t>{3, 1, 1, 1}));
  EXPECT_EQ(cycle(3), complete(3));
  EXPECT_EQ(petersen().size(), 15u);
  EXPECT_EQ(degrees(petersen()), std::vector<std::size_t>(10, 3));
  EXPECT_THROW(cycle(2), Error);
  EXPECT_EQ(star(1).order(), 1u);
}

TEST(Generators, CompleteMultipartite) {
  EXPECT_EQ(complete_multipartite(PartitionSpec({1, 1, 1})), complete(3));
  EXPECT_EQ(complete_multipartite(PartitionSpec({2, 2})).size(), 4u);
  EXPECT_TRUE(is_complete_bipartite(complete_multipartite(PartitionSpec({2, 2}))));
  const auto k333 = complete_multipartite(PartitionSpec({3, 3, 3}));
  EXPECT_EQ(k333.size(), 27u);
  EXPECT_EQ(degrees(k333), std::vector<std::size_t>(9, 6));
  // Parts occupy consecutive label ranges in the given order.
  const auto k12 = complete_multipartite(PartitionSpec({1, 2}));
  EXPECT_TRUE(k12.has_edge(0, 1));
  EXPECT_TRUE(k12.has_edge(0, 2));
  EXPECT_FALSE(k12.has_edge(1, 2));
  EXPECT_THROW(PartitionSpec({2, 0}), Error);
  EXPECT_THROW(complete_multipartite(PartitionSpec({4})), Error);
}

TEST(Generators, Turan) {
  EXPECT_EQ(turan(6, 3), complete_multipartite(PartitionSpec({2, 2, 2})));
  EXPECT_EQ(turan(4, 4), complete(4));
  EXPECT_EQ(turan(6, 3).size(), 12u);
  EXPECT_EQ(turan_partition(7, 3), PartitionSpec({3, 2, 2}));
  EXPECT_THROW(turan(5, 0), Error);
  EXPECT_THROW(turan(5, 6), Error);
  EXPECT_THROW(turan(5, 1), Error);
  EXPECT_THROW(turan_edge_count_formula(7, 3), Error);
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t r = n == 1 ? 1 : 2; r <= n; ++r) {
      const auto g = turan(n, r);
      if (n % r != 0) continue;
      EXPECT_EQ(static_cast<std::int64_t>(g.size()), turan_edge_count_formula(n, r)) << n << "," << r;
      EXPECT_EQ(triangle_total(g), turan_triangle_formula(n, r)) << n << "," << r;
    }
  }
}

TEST(Generators, MultipartiteClosedFormExamples) {
  EXPECT_EQ(multipartite_piw_closed_form(PartitionSpec({3, 3, 3})), 1944);
  EXPECT_EQ(multipartite_piw_closed_form(PartitionSpec({2, 2, 2})), 384);
  EXPECT_EQ(multipartite_piw_closed_form(PartitionSpec({2, 3})), 150);
  EXPECT_EQ(multipartite_piw_closed_form(PartitionSpec({1, 1, 1, 1})), 72);
}

TEST(Generators, MultipartiteClosedFormMatchesDirect) {
  for (std::int64_t n = 2; n <= 9; ++n) {
    std::vector<std::int64_t> cur;
    for_each_partition(n, n, cur, [](const std::vector<std::int64_t>& parts) {
      if (parts.size() < 2) return;
      const PartitionSpec spec(parts);
      EXPECT_EQ(multipartite_piw_closed_form(spec), pi_w(complete_multipartite(spec)));
    });
  }
}

TEST(Generators, BalancedBipartiteClosedForm) {
  for (std::int64_t n = 2; n <= 20; ++n) {
    const PartitionSpec spec({n / 2, n - n / 2});
    EXPECT_EQ(pi_w(complete_multipartite(spec)), n * n * (n / 2) * (n - n / 2));
  }
}

TEST(Generators, BalancingIdentity) {
  EXPECT_EQ(balancing_identity_check(1, 2, 3).formula, -24);
  EXPECT_EQ(balancing_identity_check(1, 2, 3).difference, -24);
  EXPECT_EQ(balancing_identity_check(2, 2, 2).formula, 24);
  EXPECT_EQ(balancing_identity_check(1, 1, 3).formula, -20);
  for (std::int64_t a = 1; a <= 6; ++a)
    for (std::int64_t b = 1; b <= 6; ++b)
      for (std::int64_t c = 2; c <= 6; ++c) {
        const auto r = balancing_identity_check(a, b, c);
        EXPECT_EQ(r.difference, r.formula) << a << b << c;
      }
}
