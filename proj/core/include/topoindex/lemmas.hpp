#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "topoindex/rational.hpp"

namespace topoindex {

/// 8/27, the common maximum of the three- and many-part inequalities.
Rational eight_twenty_sevenths();

/// ab + bc + ac − abc for positive a, b, c with a + b + c = 1.
/// Throws DomainError otherwise.
Rational lemma_abc(const Rational& a, const Rational& b, const Rational& c);

/// F(a) = Σ_{i<j} a_i a_j (a_i + a_j)(2 − a_i − a_j) for a_i ≥ 0 summing to 1.
Rational f_multipart(std::span<const Rational> a);

struct InequalityCheck {
  bool holds = false;
  bool equality = false;
};

/// F(a_1..a_n) ≤ F(a_1, .., a_{n−2}, a_{n−1} + a_n, 0) for a sorted descending,
/// summing to 1, n ≥ 4.
InequalityCheck reduction_step_check(std::span<const Rational> a);

/// Σ a_i² ≤ (Y − X)² + X² where Y = Σ a_i, for a sorted descending with
/// a_n ≥ X > 0 and n ≥ 2.
InequalityCheck lemma_squaresum_check(std::span<const Rational> a, const Rational& x);

/// Randomized exact sweep over all four inequalities. Numerators are drawn
/// uniformly from [0, 2^16] (positive where the lemma demands it) and
/// normalized to sum 1; tuples are sorted descending where required.
struct LemmaSweepConfig {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  std::size_t max_parts = 8;
};

struct LemmaSweepResult {
  std::uint64_t samples = 0;
  std::uint64_t abc_violations = 0;
  std::uint64_t f_violations = 0;
  std::uint64_t reduction_violations = 0;
  std::uint64_t squaresum_violations = 0;
  /// Samples that reached equality somewhere other than the stated equality case.
  std::uint64_t unexpected_equalities = 0;
  /// Largest values seen, as a sanity signal that the maxima are approached from below.
  Rational abc_max;
  Rational f_max;
  /// Human-readable description of the first failing sample, if any.
  std::optional<std::string> first_counterexample;

  bool passed() const noexcept {
    return abc_violations + f_violations + reduction_violations + squaresum_violations + unexpected_equalities == 0;
  }
};

LemmaSweepResult run_lemma_sweep(const LemmaSweepConfig& config);

}  // namespace topoindex
