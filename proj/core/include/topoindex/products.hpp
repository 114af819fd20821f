#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "topoindex/graph.hpp"

namespace topoindex {

/// Cartesian product. Vertex (a, b) gets label a·|V(H)| + b; (a,b)~(a',b')
/// iff a = a' and bb' ∈ E(H), or b = b' and aa' ∈ E(G).
Graph cartesian_product(const Graph& g, const Graph& h);

/// Left fold of cartesian_product over the factors, so labels are row-major
/// over the factor coordinates.
Graph cartesian_product(std::span<const Graph> factors);

/// Factor invariants the product formulas need, computed once per factor.
struct FactorInvariants {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t pi_v = 0;
  std::int64_t pi_w = 0;
};

FactorInvariants factor_invariants(const Graph& g);

/// Ordered list of connected factors with their cached invariants.
class ProductFactors {
 public:
  explicit ProductFactors(std::vector<Graph> factors);

  std::span<const Graph> graphs() const noexcept { return graphs_; }
  std::span<const FactorInvariants> invariants() const noexcept { return invariants_; }
  std::size_t size() const noexcept { return graphs_.size(); }

 private:
  std::vector<Graph> graphs_;
  std::vector<FactorInvariants> invariants_;
};

// None of the formulas below builds the product graph.

/// PI_w(G × H) from factor invariants.
std::int64_t piw_product_formula(const FactorInvariants& g, const FactorInvariants& h);
std::int64_t piw_product_formula(const Graph& g, const Graph& h);

/// PI_v of the n-fold product: Σ_i PI_v(G_i) Π_{j≠i} V_j².
std::int64_t piv_product_formula(std::span<const FactorInvariants> factors);
std::int64_t piv_product_formula(const ProductFactors& factors);

/// PI_w of the n-fold product:
///   Σ_i PI_w(G_i) Π_{j≠i} V_j² + 4 Σ_{i≠j} PI_v(G_i) V_j E_j Π_{k∉{i,j}} V_k².
std::int64_t piw_nfold_formula(std::span<const FactorInvariants> factors);
std::int64_t piw_nfold_formula(const ProductFactors& factors);

/// The n-fold formula evaluated as repeated application of the two-factor
/// formula, carrying (V, E, PI_v, PI_w) of the partial product forward.
std::int64_t piw_iterated_pairwise(std::span<const FactorInvariants> factors);

/// PI_w(G^k) = k·V^{2k−3}(V·PI_w(G) + 4(k−1)·E·PI_v(G)), evaluated as
/// k·V^{2k−2}·PI_w + 4k(k−1)·V^{2k−3}·E·PI_v so that k = 1 needs no negative power.
std::int64_t piw_power_formula(const FactorInvariants& g, unsigned k);
std::int64_t piw_power_formula(const Graph& g, unsigned k);

}  // namespace topoindex
