#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "topoindex/bounds.hpp"

namespace topoindex {

/// Outcome of one verification family (e.g. every bound over every labeled
/// graph up to n_max). `details` carries family-specific counts.
struct CheckResult {
  explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  bool passed = true;
  std::uint64_t examined = 0;
  /// graph6 of the first failing graph, or a description for non-graph checks.
  std::optional<std::string> counterexample;
  std::optional<std::string> failure;
  /// Bound reports for the distinct (canonical) graphs that attained equality.
  std::vector<BoundReport> equality_witnesses;
  nlohmann::json details = nlohmann::json::object();

  void fail(std::string reason, std::optional<std::string> witness = std::nullopt);
};

enum class VerifyScope { Bounds, Lemmas, Products, Extremal, All };

std::optional<VerifyScope> parse_scope(std::string_view name) noexcept;
std::string_view to_string(VerifyScope scope) noexcept;

struct VerifyConfig {
  std::size_t n_max = 7;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::uint64_t random_graphs = 10000;
  std::size_t random_max_order = 30;
  std::size_t workers = 1;
};

// Graph-level identities and bounds over every connected labeled graph with
// n ≤ n_max, plus random graphs up to random_max_order. Returns one result
// per family: bounds, per-edge inequalities, bipartite identity,
// vertex decomposition.
std::vector<CheckResult> verify_graph_families(const VerifyConfig& config);

CheckResult verify_random_bounds(const VerifyConfig& config);
CheckResult verify_multipartite_closed_form(std::size_t n_max);
CheckResult verify_balancing_identity(std::size_t n_max);
CheckResult verify_turan_formulas(std::size_t n_max);
CheckResult verify_path_closed_form(std::size_t n_max);

CheckResult verify_lemma_sweep(const VerifyConfig& config);
CheckResult verify_lemma_anchors();

/// Two-factor, three-factor and power formulas against direct computation
/// on the fixture set {P_2, P_3, P_4, C_3, C_4, C_5, K_{1,3}, K_4}.
std::vector<CheckResult> verify_products();

/// Extremal PI_w claims for 2 ≤ n ≤ n_max (n ≤ 8) and enumeration counts.
std::vector<CheckResult> verify_extremal(const VerifyConfig& config);

std::vector<CheckResult> run_verification(VerifyScope scope, const VerifyConfig& config);

}  // namespace topoindex
