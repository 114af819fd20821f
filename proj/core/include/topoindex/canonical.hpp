#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "topoindex/graph.hpp"

namespace topoindex {

/// Largest order whose upper-triangle bitstring fits in 64 bits.
inline constexpr std::size_t kMaxCanonicalOrder = 11;

/// Adjacency bitstring in graph6 pair order (x(0,1), x(0,2), x(1,2), ...),
/// first pair in the most significant used bit, so comparing `bits` as
/// integers compares the bitstrings lexicographically.
struct CanonicalForm {
  std::uint32_t n = 0;
  std::uint64_t bits = 0;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Minimum over all n! relabelings. Independent reference implementation;
/// throws TooLarge above 9 vertices.
CanonicalForm canonical_form_bruteforce(const Graph& g);

/// Minimum over relabelings that respect the stable color-refinement
/// partition (cells ordered by refined color). The refinement is itself
/// invariant under relabeling, so isomorphic graphs get equal forms.
/// Throws TooLarge above kMaxCanonicalOrder.
CanonicalForm canonical_form(const Graph& g);

Graph graph_from_canonical(const CanonicalForm& form);

/// graph6 of the canonical relabeling; equal strings iff isomorphic (n ≤ 11).
std::string canonical_graph6(const Graph& g);

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    return std::hash<std::uint64_t>{}(f.bits * 0x9E3779B97F4A7C15ULL ^ f.n);
  }
};

}  // namespace topoindex
