#include "topoindex/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "topoindex/canonical.hpp"
#include "topoindex/checked.hpp"
#include "topoindex/distance.hpp"
#include "topoindex/error.hpp"
#include "topoindex/extremal.hpp"
#include "topoindex/generators.hpp"
#include "topoindex/io.hpp"
#include "topoindex/json.hpp"
#include "topoindex/lemmas.hpp"
#include "topoindex/parallel.hpp"
#include "topoindex/products.hpp"
#include "topoindex/random_graphs.hpp"
#include "topoindex/structure.hpp"

namespace topoindex {

void CheckResult::fail(std::string reason, std::optional<std::string> witness) {
  if (!passed) return;
  passed = false;
  failure = std::move(reason);
  counterexample = std::move(witness);
}

std::optional<VerifyScope> parse_scope(std::string_view name) noexcept {
  for (auto s : {VerifyScope::Bounds, VerifyScope::Lemmas, VerifyScope::Products, VerifyScope::Extremal,
                 VerifyScope::All}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(VerifyScope scope) noexcept {
  switch (scope) {
    case VerifyScope::Bounds: return "bounds";
    case VerifyScope::Lemmas: return "lemmas";
    case VerifyScope::Products: return "products";
    case VerifyScope::Extremal: return "extremal";
    case VerifyScope::All: return "all";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kBoundCount = 4;

// First failure seen by one worker, in visitation order.
struct Failure {
  std::string reason;
  std::string graph6;
};

void keep_first(std::optional<Failure>& slot, std::string reason, const Graph& g) {
  if (!slot) slot = Failure{std::move(reason), to_graph6(g)};
}

// Everything one pass over a set of graphs accumulates.
struct FamilyTally {
  std::uint64_t graphs = 0;

  std::array<std::uint64_t, kBoundCount> equalities{};
  std::array<std::set<CanonicalForm>, kBoundCount> equality_classes;
  std::optional<Failure> bound_failure;

  std::uint64_t edges = 0;
  std::uint64_t closer_tight = 0;
  std::uint64_t degree_tight = 0;
  std::optional<Failure> edge_failure;

  std::uint64_t bipartite = 0;
  std::optional<Failure> bipartite_failure;

  std::uint64_t decomposed = 0;
  std::optional<Failure> decomposition_failure;

  void merge(const FamilyTally& o) {
    graphs += o.graphs;
    for (std::size_t b = 0; b < kBoundCount; ++b) {
      equalities[b] += o.equalities[b];
      equality_classes[b].insert(o.equality_classes[b].begin(), o.equality_classes[b].end());
    }
    edges += o.edges;
    closer_tight += o.closer_tight;
    degree_tight += o.degree_tight;
    bipartite += o.bipartite;
    decomposed += o.decomposed;
    if (!bound_failure) bound_failure = o.bound_failure;
    if (!edge_failure) edge_failure = o.edge_failure;
    if (!bipartite_failure) bipartite_failure = o.bipartite_failure;
    if (!decomposition_failure) decomposition_failure = o.decomposition_failure;
  }
};

void examine(const Graph& g, bool decompose, FamilyTally& tally) {
  ++tally.graphs;
  const auto stats = edge_stats(g);
  const IndexReport ix = compute_indices(g);
  const auto n = static_cast<std::int64_t>(g.order());

  const auto reports = all_graph_bounds(g, ix);
  for (std::size_t b = 0; b < kBoundCount; ++b) {
    const BoundReport& r = reports[b];
    if (!r.holds) keep_first(tally.bound_failure, r.bound_name + " violated", g);
    if (!r.matches_expected_class) {
      keep_first(tally.bound_failure,
                 r.bound_name + (r.equality ? " tight outside " : " not tight on ") + r.expected_equality_class, g);
    }
    if (r.equality) {
      ++tally.equalities[b];
      if (g.order() <= kMaxCanonicalOrder) tally.equality_classes[b].insert(canonical_form(g));
    }
  }

  for (const EdgeStats& s : stats) {
    ++tally.edges;
    const bool closer_ok = s.closer_sum() <= n - s.triangles;
    const bool degree_ok = s.degree_sum() <= n + s.triangles;
    tally.closer_tight += s.closer_sum() == n - s.triangles;
    tally.degree_tight += s.degree_sum() == n + s.triangles;
    if (!closer_ok || !degree_ok || s.n_u < 1 || s.n_v < 1) {
      keep_first(tally.edge_failure, "per-edge inequality at (" + std::to_string(s.u) + "," + std::to_string(s.v) + ")", g);
    }
  }

  const bool piv_full = ix.pi_v == n * ix.m;
  if (ix.is_bipartite) {
    ++tally.bipartite;
    if (ix.pi_w != n * ix.zagreb_m1) keep_first(tally.bipartite_failure, "bipartite but pi_w != n*M1", g);
    for (const EdgeStats& s : stats) {
      if (s.closer_sum() != n) keep_first(tally.bipartite_failure, "bipartite but n_u + n_v != n", g);
    }
  }
  if (piv_full != ix.is_bipartite) keep_first(tally.bipartite_failure, "pi_v == n*m disagrees with bipartiteness", g);

  if (decompose) {
    ++tally.decomposed;
    std::int64_t weighted = 0;
    std::int64_t unweighted = 0;
    for (const auto& c : vertex_contributions(g)) {
      weighted += c.weighted;
      unweighted += c.unweighted;
    }
    if (weighted != ix.pi_w || weighted != pi_w(stats)) {
      keep_first(tally.decomposition_failure, "sum of w_x != pi_w", g);
    }
    if (unweighted != ix.pi_v) keep_first(tally.decomposition_failure, "sum of m_x != pi_v", g);
  }
}

void report_failure(CheckResult& out, const std::optional<Failure>& f) {
  if (f) out.fail(f->reason, f->graph6);
}

std::vector<CheckResult> summarize(const FamilyTally& t, std::string_view suffix,
                                   const std::map<std::size_t, std::array<std::uint64_t, kBoundCount>>& per_order) {
  CheckResult bounds("graph_bounds" + std::string(suffix));
  bounds.examined = t.graphs;
  report_failure(bounds, t.bound_failure);
  const std::array<const char*, kBoundCount> names{"lower_bound_diameter", "lower_bound_path",
                                                   "upper_bound_triangles", "upper_bound_global"};
  for (std::size_t b = 0; b < kBoundCount; ++b) {
    bounds.details["equality_labeled_counts"][names[b]] = t.equalities[b];
    bounds.details["equality_classes"][names[b]] = t.equality_classes[b].size();
    for (const auto& form : t.equality_classes[b]) {
      const Graph g = graph_from_canonical(form);
      auto reports = all_graph_bounds(g);
      bounds.equality_witnesses.push_back(reports[b]);
      bounds.details["equality_graph6"][names[b]].push_back(to_graph6(g));
    }
  }
  for (const auto& [order, counts] : per_order) {
    for (std::size_t b = 0; b < kBoundCount; ++b) {
      bounds.details["equality_by_order"][std::to_string(order)][names[b]] = counts[b];
    }
  }

  CheckResult edges("per_edge_inequalities" + std::string(suffix));
  edges.examined = t.edges;
  edges.details = {{"closer_tight", t.closer_tight}, {"degree_tight", t.degree_tight}};
  report_failure(edges, t.edge_failure);

  CheckResult bip("bipartite_identity" + std::string(suffix));
  bip.examined = t.graphs;
  bip.details = {{"bipartite_graphs", t.bipartite}};
  report_failure(bip, t.bipartite_failure);

  CheckResult dec("vertex_decomposition" + std::string(suffix));
  dec.examined = t.decomposed;
  report_failure(dec, t.decomposition_failure);

  return {bounds, edges, bip, dec};
}

}  // namespace

std::vector<CheckResult> verify_graph_families(const VerifyConfig& config) {
  if (config.n_max > kMaxEnumerationOrder) {
    throw Error(ErrorCode::TooLarge, "exhaustive verification limited to n <= " + std::to_string(kMaxEnumerationOrder));
  }
  FamilyTally total;
  std::map<std::size_t, std::array<std::uint64_t, kBoundCount>> per_order;
  for (std::size_t n = 1; n <= config.n_max; ++n) {
    const std::size_t chunks = n == 1 ? 1 : std::size_t{1} << (n - 1);
    std::vector<FamilyTally> partial(chunks);
    parallel_for(chunks, config.workers, [&](std::size_t c) {
      enumerate_connected_labeled_chunk(n, c, [&](const Graph& g) { examine(g, true, partial[c]); });
    });
    FamilyTally level;
    for (const auto& p : partial) level.merge(p);
    per_order[n] = level.equalities;
    total.merge(level);
  }
  return summarize(total, "_exhaustive", per_order);
}

CheckResult verify_random_bounds(const VerifyConfig& config) {
  std::mt19937_64 rng(config.seed);
  FamilyTally tally;
  CheckResult relabel("relabeling_invariance");
  const std::size_t max_order = std::max<std::size_t>(config.random_max_order, 2);
  for (std::uint64_t i = 0; i < config.random_graphs; ++i) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, max_order)(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
    const Graph g = random_connected_graph(n, p, rng);
    examine(g, i < 1000, tally);
    const Graph h = g.relabeled(random_permutation(n, rng));
    ++relabel.examined;
    if (compute_indices(g) != compute_indices(h)) relabel.fail("indices changed under relabeling", to_graph6(g));
  }
  auto results = summarize(tally, "_random", {});
  CheckResult merged("random_graphs");
  merged.examined = tally.graphs;
  merged.details["seed"] = config.seed;
  merged.details["max_order"] = max_order;
  for (auto& r : results) {
    merged.details[r.name] = {{"passed", r.passed}, {"examined", r.examined}};
    if (!r.passed) merged.fail(r.name + ": " + *r.failure, r.counterexample);
  }
  merged.details[relabel.name] = {{"passed", relabel.passed}, {"examined", relabel.examined}};
  if (!relabel.passed) merged.fail(*relabel.failure, relabel.counterexample);
  return merged;
}

namespace {

void for_each_partition(std::int64_t remaining, std::int64_t largest, std::vector<std::int64_t>& parts,
                        const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (std::int64_t p = std::min(remaining, largest); p >= 1; --p) {
    parts.push_back(p);
    for_each_partition(remaining - p, p, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

CheckResult verify_multipartite_closed_form(std::size_t n_max) {
  CheckResult out("multipartite_closed_form");
  std::vector<std::int64_t> parts;
  for (std::int64_t n = 2; n <= static_cast<std::int64_t>(n_max); ++n) {
    for_each_partition(n, n, parts, [&](const std::vector<std::int64_t>& p) {
      if (p.size() < 2) return;
      ++out.examined;
      const PartitionSpec spec(p);
      const Graph g = complete_multipartite(spec);
      if (multipartite_piw_closed_form(spec) != pi_w(g)) out.fail("closed form != direct PI_w", to_graph6(g));
      // Stored order must not matter.
      std::vector<std::int64_t> reversed(p.rbegin(), p.rend());
      if (multipartite_piw_closed_form(PartitionSpec(reversed)) != pi_w(complete_multipartite(PartitionSpec(reversed)))) {
        out.fail("closed form != direct PI_w (ascending parts)", to_graph6(g));
      }
    });
  }
  out.details["n_max"] = n_max;
  return out;
}

CheckResult verify_balancing_identity(std::size_t n_max) {
  CheckResult out("balancing_identity");
  const auto limit = static_cast<std::int64_t>(n_max);
  for (std::int64_t n1 = 1; n1 <= limit; ++n1) {
    for (std::int64_t n2 = 1; n1 + n2 + 2 <= limit; ++n2) {
      for (std::int64_t n3 = 2; n1 + n2 + n3 <= limit; ++n3) {
        ++out.examined;
        const auto r = balancing_identity_check(n1, n2, n3);
        if (r.difference != r.formula) {
          out.fail("identity fails at (" + std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(n3) + ")");
        }
      }
    }
  }
  out.details["n_max"] = n_max;
  return out;
}

CheckResult verify_turan_formulas(std::size_t n_max) {
  CheckResult out("turan_formulas");
  for (std::size_t n = 2; n <= n_max; ++n) {
    for (std::size_t r = 2; r <= n; ++r) {
      if (n % r != 0) continue;
      ++out.examined;
      const Graph g = turan(n, r);
      const auto nn = static_cast<std::int64_t>(n);
      const auto rr = static_cast<std::int64_t>(r);
      if (static_cast<std::int64_t>(g.size()) != turan_edge_count_formula(nn, rr) ||
          triangle_total(g) != turan_triangle_formula(nn, rr)) {
        out.fail("Turan edge/triangle formula mismatch", to_graph6(g));
      }
      // PI_w(T_{n,r}) = n²m − 9t²/m, the triangle bound's equality case.
      const std::int64_t m = static_cast<std::int64_t>(g.size());
      const std::int64_t t = triangle_total(g);
      if (m * pi_w(g) != nn * nn * m * m - 9 * t * t) out.fail("Turan PI_w != n^2 m - 9t^2/m", to_graph6(g));
    }
  }
  return out;
}

CheckResult verify_path_closed_form(std::size_t n_max) {
  CheckResult out("path_closed_form");
  for (std::size_t n = 2; n <= n_max; ++n) {
    ++out.examined;
    const auto nn = static_cast<std::int64_t>(n);
    if (pi_w(path(n)) != nn * (4 * nn - 6)) out.fail("PI_w(P_n) != n(4n-6) at n=" + std::to_string(n));
  }
  return out;
}

CheckResult verify_lemma_sweep(const VerifyConfig& config) {
  CheckResult out("lemma_sweep");
  const auto sweep = run_lemma_sweep({config.samples, config.seed, 8});
  out.examined = sweep.samples;
  out.details = {{"seed", config.seed},
                 {"abc_violations", sweep.abc_violations},
                 {"f_violations", sweep.f_violations},
                 {"reduction_violations", sweep.reduction_violations},
                 {"squaresum_violations", sweep.squaresum_violations},
                 {"unexpected_equalities", sweep.unexpected_equalities},
                 {"abc_max_seen", to_string(sweep.abc_max)},
                 {"f_max_seen", to_string(sweep.f_max)}};
  if (!sweep.passed()) out.fail("lemma violated", sweep.first_counterexample);
  return out;
}

CheckResult verify_lemma_anchors() {
  CheckResult out("lemma_anchors");
  auto expect = [&](bool ok, const std::string& what) {
    ++out.examined;
    if (!ok) out.fail(what);
  };
  const Rational third = make_rational(1, 3);
  const Rational quarter = make_rational(1, 4);
  expect(lemma_abc(third, third, third) == eight_twenty_sevenths(), "abc(1/3,1/3,1/3) != 8/27");
  const std::vector<Rational> thirds{third, third, third};
  expect(f_multipart(thirds) == eight_twenty_sevenths(), "F(1/3,1/3,1/3) != 8/27");
  const std::vector<Rational> quarters(4, quarter);
  expect(f_multipart(quarters) == make_rational(9, 32), "F(1/4,1/4,1/4,1/4) != 9/32");
  const auto q = reduction_step_check(quarters);
  expect(q.holds && q.equality, "reduction step not tight at (1/4,1/4,1/4,1/4)");
  const std::vector<Rational> squares{make_rational(3), make_rational(1)};
  const auto s = lemma_squaresum_check(squares, make_rational(1));
  expect(s.holds && s.equality, "square-sum lemma not tight at (3,1), X=1");
  return out;
}

namespace {

struct Fixture {
  std::string name;
  Graph graph;
};

std::vector<Fixture> product_fixtures() {
  return {{"P2", path(2)},  {"P3", path(3)},  {"P4", path(4)},   {"C3", cycle(3)},
          {"C4", cycle(4)}, {"C5", cycle(5)}, {"K1,3", star(4)}, {"K4", complete(4)}};
}

// Distance and degree additivity on every vertex / pair of a two-factor product.
bool product_metric_additive(const Graph& g, const Graph& h, const Graph& product) {
  const DistanceMatrix dg(g);
  const DistanceMatrix dh(h);
  const DistanceMatrix dp(product);
  const auto vh = static_cast<Vertex>(h.order());
  for (Vertex x = 0; x < product.order(); ++x) {
    if (product.degree(x) != g.degree(x / vh) + h.degree(x % vh)) return false;
    for (Vertex y = 0; y < product.order(); ++y) {
      if (dp(x, y) != dg(x / vh, y / vh) + dh(x % vh, y % vh)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<CheckResult> verify_products() {
  const auto fixtures = product_fixtures();
  CheckResult pairs("product_pairs");
  CheckResult triples("product_triples");
  CheckResult power("power_corollary");
  CheckResult metric("product_additivity");

  for (const auto& a : fixtures) {
    for (const auto& b : fixtures) {
      ++pairs.examined;
      const Graph prod = cartesian_product(a.graph, b.graph);
      const auto direct = compute_indices(prod);
      const std::string label = a.name + " x " + b.name;
      if (piw_product_formula(a.graph, b.graph) != direct.pi_w) pairs.fail("PI_w formula mismatch for " + label);
      const ProductFactors factors({a.graph, b.graph});
      if (piv_product_formula(factors) != direct.pi_v) pairs.fail("PI_v formula mismatch for " + label);
      if (piw_nfold_formula(factors) != direct.pi_w) pairs.fail("n-fold formula mismatch for " + label);
      if (static_cast<std::int64_t>(prod.size()) !=
          static_cast<std::int64_t>(a.graph.order() * b.graph.size() + b.graph.order() * a.graph.size())) {
        pairs.fail("edge count mismatch for " + label);
      }
      ++metric.examined;
      if (!product_metric_additive(a.graph, b.graph, prod)) metric.fail("distance/degree additivity fails for " + label);
    }
  }

  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    for (std::size_t j = i; j < fixtures.size(); ++j) {
      for (std::size_t k = j; k < fixtures.size(); ++k) {
        ++triples.examined;
        const std::vector<Graph> graphs{fixtures[i].graph, fixtures[j].graph, fixtures[k].graph};
        const ProductFactors factors(graphs);
        const auto direct = compute_indices(cartesian_product(graphs));
        const std::string label = fixtures[i].name + " x " + fixtures[j].name + " x " + fixtures[k].name;
        if (piw_nfold_formula(factors) != direct.pi_w) triples.fail("n-fold PI_w mismatch for " + label);
        if (piw_iterated_pairwise(factors.invariants()) != direct.pi_w) triples.fail("iterated PI_w mismatch for " + label);
        if (piv_product_formula(factors) != direct.pi_v) triples.fail("PI_v mismatch for " + label);
      }
    }
  }

  for (const auto& f : {Fixture{"P2", path(2)}, Fixture{"P3", path(3)}}) {
    for (unsigned k = 1; k <= 4; ++k) {
      ++power.examined;
      const std::vector<Graph> copies(k, f.graph);
      const ProductFactors factors(copies);
      const auto formula = piw_power_formula(f.graph, k);
      if (formula != piw_nfold_formula(factors)) {
        power.fail("power corollary != n-fold formula for " + f.name + "^" + std::to_string(k));
      }
      if (formula != pi_w(cartesian_product(copies))) {
        power.fail("power corollary != direct for " + f.name + "^" + std::to_string(k));
      }
    }
  }

  const std::vector<Graph> square{path(2), path(2)};
  const std::vector<Graph> cube{path(2), path(2), path(2)};
  const auto c4 = pi_w(cartesian_product(square));
  const auto q3 = pi_w(cartesian_product(cube));
  power.details = {{"pi_w_C4_direct", c4},
                   {"pi_w_C4_formula", piw_product_formula(path(2), path(2))},
                   {"pi_w_Q3_direct", q3},
                   {"pi_w_Q3_formula", piw_nfold_formula(ProductFactors(cube))}};
  return {pairs, triples, power, metric};
}

std::vector<CheckResult> verify_extremal(const VerifyConfig& config) {
  const std::size_t n_max = std::min(config.n_max, kMaxEnumerationOrder);
  CheckResult counts("enumeration_counts");
  // Connected graphs up to isomorphism, n = 1..8 (OEIS A001349).
  constexpr std::array<std::uint64_t, 9> kConnected{0, 1, 1, 2, 6, 21, 112, 853, 11117};
  for (std::size_t n = 1; n <= n_max; ++n) {
    ++counts.examined;
    const auto found = enumerate_connected({n, true, std::nullopt}, [](const Graph&) {});
    counts.details["connected_classes"][std::to_string(n)] = found;
    if (found != kConnected[n]) counts.fail("connected class count mismatch at n=" + std::to_string(n));
    if (n <= 6) {
      // Independent route: brute-force canonical forms of every labeled graph.
      std::set<CanonicalForm> forms;
      enumerate_connected({n, false, std::nullopt}, [&](const Graph& g) { forms.insert(canonical_form_bruteforce(g)); });
      if (forms.size() != found) counts.fail("brute-force canonical count disagrees at n=" + std::to_string(n));
    }
  }

  CheckResult extremes("extremal_pi_w");
  for (std::size_t n = 2; n <= n_max; ++n) {
    ++extremes.examined;
    const auto r = extremal_search({n, true, std::nullopt}, Objective::PiW);
    const auto nn = static_cast<std::int64_t>(n);
    const std::string key = std::to_string(n);
    extremes.details[key] = r;
    if (r.min_value != nn * (4 * nn - 6) || r.min_witnesses != std::vector{canonical_graph6(path(n))}) {
      extremes.fail("PI_w minimum is not n(4n-6) uniquely at P_n for n=" + key);
    }
    if (27 * r.max_value > 8 * nn * nn * nn * nn) extremes.fail("PI_w maximum exceeds 8n^4/27 at n=" + key);
    if (n % 3 == 0) {
      const std::int64_t k = nn / 3;
      const auto expected = canonical_graph6(complete_multipartite(PartitionSpec({k, k, k})));
      if (27 * r.max_value != 8 * nn * nn * nn * nn || r.max_witnesses != std::vector{expected}) {
        extremes.fail("PI_w maximum is not 8n^4/27 uniquely at K_{n/3,n/3,n/3} for n=" + key);
      }
    }
  }
  return {counts, extremes};
}

std::vector<CheckResult> run_verification(VerifyScope scope, const VerifyConfig& config) {
  std::vector<CheckResult> out;
  auto append = [&out](std::vector<CheckResult> more) { out.insert(out.end(), more.begin(), more.end()); };
  const bool all = scope == VerifyScope::All;
  if (all || scope == VerifyScope::Bounds) {
    out.push_back(verify_path_closed_form(50));
    append(verify_graph_families(config));
    out.push_back(verify_random_bounds(config));
    out.push_back(verify_multipartite_closed_form(9));
    out.push_back(verify_balancing_identity(12));
    out.push_back(verify_turan_formulas(12));
  }
  if (all || scope == VerifyScope::Lemmas) {
    out.push_back(verify_lemma_anchors());
    out.push_back(verify_lemma_sweep(config));
  }
  if (all || scope == VerifyScope::Products) append(verify_products());
  if (all || scope == VerifyScope::Extremal) append(verify_extremal(config));
  return out;
}

}  // namespace topoindex
