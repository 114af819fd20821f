#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "topoindex/graph.hpp"

namespace topoindex {

/// Connected graph on n vertices: a random recursive tree (vertex i attaches
/// to a uniform earlier vertex) plus every remaining pair independently with
/// probability `extra_edge_probability`, then a uniform relabeling.
Graph random_connected_graph(std::size_t n, double extra_edge_probability, std::mt19937_64& rng);

/// Uniform random permutation of 0..n-1.
std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng);

}  // namespace topoindex
