#include "topoindex/products.hpp"

#include "topoindex/checked.hpp"
#include "topoindex/error.hpp"
#include "topoindex/indices.hpp"

namespace topoindex {

Graph cartesian_product(const Graph& g, const Graph& h) {
  require_connected(g);
  require_connected(h);
  const auto vg = static_cast<std::int64_t>(g.order());
  const auto vh = static_cast<std::int64_t>(h.order());
  const std::int64_t n = checked_mul(vg, vh);
  const std::int64_t m = checked_add(checked_mul(vg, static_cast<std::int64_t>(h.size())),
                                     checked_mul(vh, static_cast<std::int64_t>(g.size())));
  if (n > std::int64_t{UINT32_MAX}) throw Error(ErrorCode::Overflow, "product has too many vertices");

  auto label = [vh](Vertex a, Vertex b) { return static_cast<Vertex>(std::int64_t{a} * vh + b); };
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (Vertex a = 0; a < g.order(); ++a) {
    for (const Edge& e : h.edges()) edges.push_back({label(a, e.u), label(a, e.v)});
  }
  for (Vertex b = 0; b < h.order(); ++b) {
    for (const Edge& e : g.edges()) edges.push_back({label(e.u, b), label(e.v, b)});
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph cartesian_product(std::span<const Graph> factors) {
  if (factors.empty()) throw Error(ErrorCode::SizeTooSmall, "product needs at least one factor");
  Graph acc = factors.front();
  require_connected(acc);
  for (std::size_t i = 1; i < factors.size(); ++i) acc = cartesian_product(acc, factors[i]);
  return acc;
}

FactorInvariants factor_invariants(const Graph& g) {
  const auto stats = edge_stats(g);
  return {static_cast<std::int64_t>(g.order()), static_cast<std::int64_t>(g.size()), pi_v(stats), pi_w(stats)};
}

ProductFactors::ProductFactors(std::vector<Graph> factors) : graphs_(std::move(factors)) {
  if (graphs_.empty()) throw Error(ErrorCode::SizeTooSmall, "product needs at least one factor");
  invariants_.reserve(graphs_.size());
  for (const Graph& g : graphs_) invariants_.push_back(factor_invariants(g));
}

std::int64_t piw_product_formula(const FactorInvariants& g, const FactorInvariants& h) {
  const std::int64_t direct_terms =
      checked_add(checked_product({g.vertices, g.vertices, h.pi_w}), checked_product({h.vertices, h.vertices, g.pi_w}));
  const std::int64_t cross_terms = checked_mul(
      4, checked_add(checked_product({g.vertices, g.edges, h.pi_v}), checked_product({h.vertices, h.edges, g.pi_v})));
  return checked_add(direct_terms, cross_terms);
}

std::int64_t piw_product_formula(const Graph& g, const Graph& h) {
  return piw_product_formula(factor_invariants(g), factor_invariants(h));
}

namespace {

// Π_{k ∉ skip} V_k²
std::int64_t squared_orders_except(std::span<const FactorInvariants> factors, std::size_t skip_a,
                                   std::size_t skip_b) {
  std::int64_t out = 1;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k == skip_a || k == skip_b) continue;
    out = checked_product({out, factors[k].vertices, factors[k].vertices});
  }
  return out;
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

std::int64_t piv_product_formula(std::span<const FactorInvariants> factors) {
  if (factors.empty()) throw Error(ErrorCode::SizeTooSmall, "product needs at least one factor");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    sum = checked_add(sum, checked_mul(factors[i].pi_v, squared_orders_except(factors, i, kNone)));
  }
  return sum;
}

std::int64_t piv_product_formula(const ProductFactors& factors) { return piv_product_formula(factors.invariants()); }

std::int64_t piw_nfold_formula(std::span<const FactorInvariants> factors) {
  if (factors.empty()) throw Error(ErrorCode::SizeTooSmall, "product needs at least one factor");
  std::int64_t weighted = 0;
  std::int64_t cross = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    weighted = checked_add(weighted, checked_mul(factors[i].pi_w, squared_orders_except(factors, i, kNone)));
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (i == j) continue;
      cross = checked_add(cross, checked_product({factors[i].pi_v, factors[j].vertices, factors[j].edges,
                                                  squared_orders_except(factors, i, j)}));
    }
  }
  return checked_add(weighted, checked_mul(4, cross));
}

std::int64_t piw_nfold_formula(const ProductFactors& factors) { return piw_nfold_formula(factors.invariants()); }

std::int64_t piw_iterated_pairwise(std::span<const FactorInvariants> factors) {
  if (factors.empty()) throw Error(ErrorCode::SizeTooSmall, "product needs at least one factor");
  FactorInvariants acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    const FactorInvariants& next = factors[i];
    FactorInvariants merged;
    merged.pi_w = piw_product_formula(acc, next);
    const FactorInvariants pair[] = {acc, next};
    merged.pi_v = piv_product_formula(pair);
    merged.vertices = checked_mul(acc.vertices, next.vertices);
    merged.edges = checked_add(checked_mul(acc.vertices, next.edges), checked_mul(next.vertices, acc.edges));
    acc = merged;
  }
  return acc.pi_w;
}

std::int64_t piw_power_formula(const FactorInvariants& g, unsigned k) {
  if (k < 1) throw Error(ErrorCode::DomainError, "power needs k >= 1");
  const std::int64_t kk = k;
  const std::int64_t weighted = checked_product({kk, checked_pow(g.vertices, 2 * k - 2), g.pi_w});
  if (k == 1) return weighted;
  const std::int64_t cross = checked_product({4, kk, kk - 1, checked_pow(g.vertices, 2 * k - 3), g.edges, g.pi_v});
  return checked_add(weighted, cross);
}

std::int64_t piw_power_formula(const Graph& g, unsigned k) { return piw_power_formula(factor_invariants(g), k); }

}  // namespace topoindex
