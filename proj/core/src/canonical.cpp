#include "topoindex/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "topoindex/error.hpp"
#include "topoindex/io.hpp"

namespace topoindex {

namespace {

std::uint64_t pair_count(std::uint32_t n) { return std::uint64_t{n} * (n - 1) / 2; }

// `position[v]` is the new label of v.
std::uint64_t encode(const Graph& g, std::span<const Vertex> position) {
  const std::uint64_t length = pair_count(static_cast<std::uint32_t>(g.order()));
  std::uint64_t bits = 0;
  for (const Edge& e : g.edges()) {
    auto i = position[e.u];
    auto j = position[e.v];
    if (i > j) std::swap(i, j);
    const std::uint64_t k = std::uint64_t{j} * (j - 1) / 2 + i;
    bits |= std::uint64_t{1} << (length - 1 - k);
  }
  return bits;
}

void require_order(const Graph& g, std::size_t limit) {
  if (g.order() > limit) {
    throw Error(ErrorCode::TooLarge, "canonical form limited to " + std::to_string(limit) + " vertices");
  }
}

// Stable color refinement; colors are ranks of label-independent signatures.
std::vector<std::uint32_t> refine_colors(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = static_cast<std::uint32_t>(g.degree(v));
  std::size_t classes = 0;
  std::vector<std::vector<std::uint32_t>> signature(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.assign(1, color[v]);
      for (Vertex w : g.neighbors(v)) sig.push_back(color[w]);
      std::sort(sig.begin() + 1, sig.end());
    }
    auto distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<std::uint32_t>(
          std::lower_bound(distinct.begin(), distinct.end(), signature[v]) - distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return color;
}

}  // namespace

CanonicalForm canonical_form_bruteforce(const Graph& g) {
  require_order(g, 9);
  const auto n = static_cast<std::uint32_t>(g.order());
  std::vector<Vertex> position(n);
  std::iota(position.begin(), position.end(), 0);
  std::uint64_t best = UINT64_MAX;
  do {
    best = std::min(best, encode(g, position));
  } while (std::next_permutation(position.begin(), position.end()));
  return {n, best};
}

CanonicalForm canonical_form(const Graph& g) {
  require_order(g, kMaxCanonicalOrder);
  const auto n = static_cast<std::uint32_t>(g.order());
  const auto color = refine_colors(g);

  // slots[p] is the vertex placed at label p; cells are maximal runs of equal color.
  std::vector<Vertex> slots(n);
  std::iota(slots.begin(), slots.end(), 0);
  std::sort(slots.begin(), slots.end(), [&](Vertex a, Vertex b) {
    return color[a] != color[b] ? color[a] < color[b] : a < b;
  });
  std::vector<std::size_t> cell_start;
  for (std::size_t p = 0; p < n; ++p) {
    if (p == 0 || color[slots[p]] != color[slots[p - 1]]) cell_start.push_back(p);
  }
  cell_start.push_back(n);

  std::vector<Vertex> position(n);
  std::uint64_t best = UINT64_MAX;
  while (true) {
    for (std::size_t p = 0; p < n; ++p) position[slots[p]] = static_cast<Vertex>(p);
    best = std::min(best, encode(g, position));
    // Odometer over the per-cell permutations, last cell fastest.
    std::size_t cell = cell_start.size() - 1;
    bool advanced = false;
    while (cell-- > 0) {
      auto first = slots.begin() + static_cast<std::ptrdiff_t>(cell_start[cell]);
      auto last = slots.begin() + static_cast<std::ptrdiff_t>(cell_start[cell + 1]);
      if (std::next_permutation(first, last)) {
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return {n, best};
}

Graph graph_from_canonical(const CanonicalForm& form) {
  const std::uint64_t length = pair_count(form.n);
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < form.n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if ((form.bits >> (length - 1 - k)) & 1U) edges.push_back({i, j});
    }
  }
  return Graph::unchecked_from_edges(form.n, edges);
}

std::string canonical_graph6(const Graph& g) { return to_graph6(graph_from_canonical(canonical_form(g))); }

}  // namespace topoindex
