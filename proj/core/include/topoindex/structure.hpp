#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "topoindex/graph.hpp"

namespace topoindex {

// Structural recognizers for the rigid equality classes. Each one is a
// direct check on degrees and adjacency, not an isomorphism search.

bool is_path(const Graph& g);

/// Part sizes (descending) if g is complete multipartite, i.e. non-adjacency
/// is an equivalence relation; K_1 yields {1}.
std::optional<std::vector<std::int64_t>> complete_multipartite_parts(const Graph& g);

bool is_complete_bipartite(const Graph& g);

/// Complete multipartite with all parts equal (T_{n,r} with r | n).
bool is_balanced_complete_multipartite(const Graph& g);

/// K_{n/3,n/3,n/3}.
bool is_balanced_tripartite(const Graph& g);

}  // namespace topoindex
