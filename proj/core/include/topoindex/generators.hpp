#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "topoindex/graph.hpp"

namespace topoindex {

/// Part sizes (n_1, ..., n_k) of a complete multipartite graph, kept in the
/// order given. Every part is at least 1 and there is at least one part.
class PartitionSpec {
 public:
  explicit PartitionSpec(std::vector<std::int64_t> parts);

  std::span<const std::int64_t> parts() const noexcept { return parts_; }
  std::size_t part_count() const noexcept { return parts_.size(); }
  std::int64_t order() const noexcept { return order_; }
  PartitionSpec sorted_descending() const;

  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;

 private:
  std::vector<std::int64_t> parts_;
  std::int64_t order_ = 0;
};

// Labels: path i-(i+1), star centered at 0, cycle i-(i+1 mod n).
Graph path(std::size_t n);
Graph star(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph petersen();

/// Parts occupy consecutive label ranges in the given order.
Graph complete_multipartite(const PartitionSpec& spec);

/// Balanced r-partite graph: the first (n mod r) parts get ceil(n/r) vertices.
Graph turan(std::size_t n, std::size_t r);
PartitionSpec turan_partition(std::size_t n, std::size_t r);

/// Σ_{i<j} n_i n_j (n_i + n_j)(2n − n_i − n_j), evaluated with checked arithmetic.
std::int64_t multipartite_piw_closed_form(const PartitionSpec& spec);

/// Balanced Turán counts for r | n: (1 − 1/r) n²/2 edges and
/// n(n − n/r)(n − 2n/r)/6 triangles. Throws InvalidR when r does not divide n.
std::int64_t turan_edge_count_formula(std::int64_t n, std::int64_t r);
std::int64_t turan_triangle_formula(std::int64_t n, std::int64_t r);

/// Both sides of the three-part balancing identity:
///   first  = PI_w(K_{n1,n2,n3}) − PI_w(K_{n1+1,n2,n3−1})  (two closed forms)
///   second = n (n − n2)(n1 + 1 − n3)
struct BalancingIdentity {
  std::int64_t difference = 0;
  std::int64_t formula = 0;
};
BalancingIdentity balancing_identity_check(std::int64_t n1, std::int64_t n2, std::int64_t n3);

}  // namespace topoindex
