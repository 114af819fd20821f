#include "topoindex/generators.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "topoindex/checked.hpp"
#include "topoindex/error.hpp"

namespace topoindex {

PartitionSpec::PartitionSpec(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(ErrorCode::SizeTooSmall, "partition needs at least one part");
  for (auto p : parts_) {
    if (p < 1) throw Error(ErrorCode::SizeTooSmall, "partition part of size " + std::to_string(p));
    order_ = checked_add(order_, p);
  }
}

PartitionSpec PartitionSpec::sorted_descending() const {
  auto copy = parts_;
  std::sort(copy.begin(), copy.end(), std::greater<>());
  return PartitionSpec(std::move(copy));
}

Graph path(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::SizeTooSmall, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

Graph star(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::SizeTooSmall, "star needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({0, i});
  return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::SizeTooSmall, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return Graph::from_edges(n, edges);
}

Graph complete(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::SizeTooSmall, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) edges.push_back({i, j});
  }
  return Graph::from_edges(n, edges);
}

Graph petersen() {
  // Outer 5-cycle 0..4, spokes i-(i+5), inner pentagram on 5..9.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return Graph::from_edges(10, edges);
}

Graph complete_multipartite(const PartitionSpec& spec) {
  if (spec.part_count() < 2 && spec.order() > 1) {
    throw Error(ErrorCode::SizeTooSmall, "complete multipartite graph needs at least 2 parts");
  }
  const auto parts = spec.parts();
  std::vector<Vertex> start(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) start[i + 1] = start[i] + static_cast<Vertex>(parts[i]);

  std::vector<Edge> edges;
  for (std::size_t a = 0; a < parts.size(); ++a) {
    for (std::size_t b = a + 1; b < parts.size(); ++b) {
      for (Vertex x = start[a]; x < start[a + 1]; ++x) {
        for (Vertex y = start[b]; y < start[b + 1]; ++y) edges.push_back({x, y});
      }
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(spec.order()), edges);
}

PartitionSpec turan_partition(std::size_t n, std::size_t r) {
  if (r < 1 || r > n) {
    throw Error(ErrorCode::InvalidR, "Turan graph needs 1 <= r <= n, got n=" + std::to_string(n) +
                                         " r=" + std::to_string(r));
  }
  std::vector<std::int64_t> parts(r, static_cast<std::int64_t>(n / r));
  for (std::size_t i = 0; i < n % r; ++i) ++parts[i];
  return PartitionSpec(std::move(parts));
}

Graph turan(std::size_t n, std::size_t r) {
  auto spec = turan_partition(n, r);
  if (r == 1 && n > 1) throw Error(ErrorCode::InvalidR, "T_{n,1} is edgeless and disconnected for n > 1");
  return complete_multipartite(spec);
}

std::int64_t multipartite_piw_closed_form(const PartitionSpec& spec) {
  if (spec.part_count() < 2) throw Error(ErrorCode::SizeTooSmall, "closed form needs at least 2 parts");
  const auto parts = spec.parts();
  const std::int64_t n = spec.order();
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      const auto a = parts[i];
      const auto b = parts[j];
      sum = checked_add(sum, checked_product({a, b, a + b, 2 * n - a - b}));
    }
  }
  return sum;
}

std::int64_t turan_edge_count_formula(std::int64_t n, std::int64_t r) {
  if (r < 1 || r > n || n % r != 0) throw Error(ErrorCode::InvalidR, "formula needs r | n");
  // (1 − 1/r) n²/2 = (r − 1) n² / (2r); n = r·k so this is (r − 1) r k² / 2.
  const std::int64_t k = n / r;
  return checked_product({r - 1, r, k, k}) / 2;
}

std::int64_t turan_triangle_formula(std::int64_t n, std::int64_t r) {
  if (r < 1 || r > n || n % r != 0) throw Error(ErrorCode::InvalidR, "formula needs r | n");
  const std::int64_t k = n / r;
  return checked_product({n, n - k, n - 2 * k}) / 6;
}

BalancingIdentity balancing_identity_check(std::int64_t n1, std::int64_t n2, std::int64_t n3) {
  if (n1 < 1 || n2 < 1 || n3 < 2) throw Error(ErrorCode::DomainError, "needs n1, n2 >= 1 and n3 >= 2");
  const std::int64_t n = n1 + n2 + n3;
  BalancingIdentity out;
  out.difference = checked_sub(multipartite_piw_closed_form(PartitionSpec({n1, n2, n3})),
                               multipartite_piw_closed_form(PartitionSpec({n1 + 1, n2, n3 - 1})));
  out.formula = checked_product({n, n - n2, n1 + 1 - n3});
  return out;
}

}  // namespace topoindex
