#include "topoindex/lemmas.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "topoindex/error.hpp"

namespace topoindex {

Rational eight_twenty_sevenths() { return make_rational(8, 27); }

Rational lemma_abc(const Rational& a, const Rational& b, const Rational& c) {
  if (a <= 0 || b <= 0 || c <= 0) throw Error(ErrorCode::DomainError, "a, b, c must be positive");
  if (a + b + c != 1) throw Error(ErrorCode::DomainError, "a + b + c must equal 1");
  return Rational(a * b + b * c + a * c - a * b * c);
}

namespace {

void require_distribution(std::span<const Rational> a) {
  if (a.empty()) throw Error(ErrorCode::DomainError, "need at least one value");
  Rational sum = 0;
  for (const auto& x : a) {
    if (x < 0) throw Error(ErrorCode::DomainError, "values must be nonnegative");
    sum += x;
  }
  if (sum != 1) throw Error(ErrorCode::DomainError, "values must sum to 1");
}

void require_descending(std::span<const Rational> a) {
  if (!std::is_sorted(a.begin(), a.end(), std::greater<>())) {
    throw Error(ErrorCode::DomainError, "values must be sorted descending");
  }
}

Rational f_unchecked(std::span<const Rational> a) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      const Rational s = a[i] + a[j];
      sum += a[i] * a[j] * s * (2 - s);
    }
  }
  return sum;
}

}  // namespace

Rational f_multipart(std::span<const Rational> a) {
  require_distribution(a);
  return f_unchecked(a);
}

InequalityCheck reduction_step_check(std::span<const Rational> a) {
  require_distribution(a);
  require_descending(a);
  if (a.size() < 4) throw Error(ErrorCode::DomainError, "reduction step needs n >= 4");
  std::vector<Rational> merged(a.begin(), a.end());
  merged[merged.size() - 2] += merged.back();
  merged.back() = 0;
  const Rational lhs = f_unchecked(a);
  const Rational rhs = f_unchecked(merged);
  return {lhs <= rhs, lhs == rhs};
}

InequalityCheck lemma_squaresum_check(std::span<const Rational> a, const Rational& x) {
  if (a.size() < 2) throw Error(ErrorCode::DomainError, "square-sum lemma needs n >= 2");
  require_descending(a);
  if (x <= 0 || a.back() < x) throw Error(ErrorCode::DomainError, "need a_n >= X > 0");
  Rational y = 0;
  Rational squares = 0;
  for (const auto& v : a) {
    y += v;
    squares += v * v;
  }
  const Rational rest = y - x;
  const Rational bound = rest * rest + x * x;
  return {squares <= bound, squares == bound};
}

namespace {

constexpr std::int64_t kNumeratorMax = std::int64_t{1} << 16;

struct Sampler {
  std::mt19937_64 rng;

  std::int64_t numerator(std::int64_t lo) {
    return std::uniform_int_distribution<std::int64_t>(lo, kNumeratorMax)(rng);
  }
  std::size_t count(std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); }

  // `parts` numerators normalized to sum 1; at least one numerator is nonzero.
  std::vector<Rational> distribution(std::size_t parts, std::int64_t lo) {
    std::vector<std::int64_t> raw(parts);
    std::int64_t total = 0;
    do {
      total = 0;
      for (auto& r : raw) total += (r = numerator(lo));
    } while (total == 0);
    std::vector<Rational> out;
    out.reserve(parts);
    for (auto r : raw) out.push_back(make_rational(r, total));
    return out;
  }
};

std::string describe(std::string_view what, std::span<const Rational> a) {
  std::string out(what);
  out += " at (";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += to_string(a[i]);
  }
  return out + ")";
}

bool is_three_thirds(std::span<const Rational> a) {
  const Rational third = make_rational(1, 3);
  std::size_t thirds = 0;
  for (const auto& v : a) {
    if (v == third) {
      ++thirds;
    } else if (v != 0) {
      return false;
    }
  }
  return thirds == 3;
}

}  // namespace

LemmaSweepResult run_lemma_sweep(const LemmaSweepConfig& config) {
  if (config.max_parts < 4) throw Error(ErrorCode::DomainError, "sweep needs max_parts >= 4");
  Sampler sampler{std::mt19937_64(config.seed)};
  LemmaSweepResult out;
  const Rational cap = eight_twenty_sevenths();
  auto fail = [&](std::uint64_t& counter, std::string what, std::span<const Rational> a) {
    ++counter;
    if (!out.first_counterexample) out.first_counterexample = describe(what, a);
  };

  for (std::uint64_t s = 0; s < config.samples; ++s) {
    ++out.samples;

    const auto abc = sampler.distribution(3, 1);
    const Rational value = lemma_abc(abc[0], abc[1], abc[2]);
    if (value < 0 || value > cap) fail(out.abc_violations, "ab+bc+ac-abc outside [0, 8/27]", abc);
    if (value == cap && !is_three_thirds(abc)) fail(out.unexpected_equalities, "abc maximum off-center", abc);
    out.abc_max = std::max(out.abc_max, value);

    auto parts = sampler.distribution(sampler.count(1, config.max_parts), 0);
    const Rational f = f_multipart(parts);
    if (f < 0 || f > cap) fail(out.f_violations, "F outside [0, 8/27]", parts);
    if (f == cap && !is_three_thirds(parts)) fail(out.unexpected_equalities, "F maximum off-center", parts);
    out.f_max = std::max(out.f_max, f);

    auto reduce = sampler.distribution(sampler.count(4, config.max_parts), 0);
    std::sort(reduce.begin(), reduce.end(), std::greater<>());
    const auto step = reduction_step_check(reduce);
    if (!step.holds) fail(out.reduction_violations, "reduction step", reduce);
    const bool quarter_case =
        reduce.size() == 4 && std::all_of(reduce.begin(), reduce.end(), [](const Rational& v) { return v == make_rational(1, 4); });
    if (step.equality && reduce.back() != 0 && !quarter_case) {
      fail(out.unexpected_equalities, "reduction step tight", reduce);
    }

    const std::size_t count = sampler.count(2, config.max_parts);
    std::vector<Rational> values;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) values.push_back(make_rational(sampler.numerator(1)));
    std::sort(values.begin(), values.end(), std::greater<>());
    const Rational x = Rational(values.back() * make_rational(sampler.numerator(1), kNumeratorMax));
    const auto sq = lemma_squaresum_check(values, x);
    if (!sq.holds) fail(out.squaresum_violations, "square-sum lemma", values);
    if (sq.equality && !(values.size() == 2 && values[1] == x)) {
      fail(out.unexpected_equalities, "square-sum lemma tight", values);
    }
  }
  return out;
}

}  // namespace topoindex
