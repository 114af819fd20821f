#include "topoindex/random_graphs.hpp"

#include <algorithm>
#include <numeric>

#include "topoindex/error.hpp"

namespace topoindex {

std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Graph random_connected_graph(std::size_t n, double extra_edge_probability, std::mt19937_64& rng) {
  if (n < 1) throw Error(ErrorCode::SizeTooSmall, "random graph needs n >= 1");
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (std::size_t i = 1; i < n; ++i) {
    const auto parent = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
    adjacent[i][parent] = adjacent[parent][i] = 1;
  }
  std::bernoulli_distribution extra(extra_edge_probability);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!adjacent[i][j] && extra(rng)) adjacent[i][j] = adjacent[j][i] = 1;
    }
  }
  const auto perm = random_permutation(n, rng);
  std::vector<Edge> edges;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (adjacent[i][j]) edges.push_back({perm[i], perm[j]});
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace topoindex
