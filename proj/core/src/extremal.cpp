#include "topoindex/extremal.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <mutex>
#include <set>
#include <unordered_set>

#include "topoindex/canonical.hpp"
#include "topoindex/error.hpp"
#include "topoindex/io.hpp"
#include "topoindex/parallel.hpp"

namespace topoindex {

namespace {

void require_internal_order(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::SizeTooSmall, "enumeration needs n >= 1");
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::TooLarge, "internal enumeration is limited to n <= " +
                                         std::to_string(kMaxEnumerationOrder) + "; pipe graph6 via --input");
  }
}

using Rows = std::array<std::uint32_t, kMaxEnumerationOrder>;

bool rows_connected(const Rows& rows, std::size_t n) {
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  std::uint32_t reached = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= rows[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == all;
}

Graph graph_from_rows(const Rows& rows, std::size_t n, std::vector<Edge>& scratch) {
  scratch.clear();
  for (Vertex i = 0; i < n; ++i) {
    for (std::uint32_t r = rows[i] >> (i + 1); r; r &= r - 1) {
      scratch.push_back({i, static_cast<Vertex>(i + 1 + static_cast<unsigned>(std::countr_zero(r)))});
    }
  }
  return Graph::unchecked_from_edges(n, scratch);
}

}  // namespace

std::uint64_t enumerate_connected_labeled_chunk(std::size_t n, std::uint64_t chunk, const GraphVisitor& visit) {
  require_internal_order(n);
  if (n == 1) {
    if (chunk != 0) return 0;
    visit(Graph::from_edges(1, {}));
    return 1;
  }
  if (chunk >= (std::uint64_t{1} << (n - 1))) return 0;

  Rows rows{};
  for (std::size_t j = 1; j < n; ++j) {
    if ((chunk >> (j - 1)) & 1U) {
      rows[0] |= std::uint32_t{1} << j;
      rows[j] |= 1U;
    }
  }
  std::vector<Edge> free_pairs;
  for (Vertex j = 2; j < n; ++j) {
    for (Vertex i = 1; i < j; ++i) free_pairs.push_back({i, j});
  }

  // Gray-code walk over the remaining pairs: each step toggles one edge.
  std::uint64_t visited = 0;
  std::vector<Edge> scratch;
  const std::uint64_t steps = std::uint64_t{1} << free_pairs.size();
  for (std::uint64_t step = 0; step < steps; ++step) {
    if (step != 0) {
      const Edge& e = free_pairs[static_cast<std::size_t>(std::countr_zero(step))];
      rows[e.u] ^= std::uint32_t{1} << e.v;
      rows[e.v] ^= std::uint32_t{1} << e.u;
    }
    if (rows[0] == 0 || !rows_connected(rows, n)) continue;
    visit(graph_from_rows(rows, n, scratch));
    ++visited;
  }
  return visited;
}

std::vector<Graph> all_graphs_up_to_isomorphism(std::size_t n) {
  require_internal_order(n);
  std::vector<Graph> level{Graph::unchecked_from_edges(1, {})};
  for (std::size_t order = 2; order <= n; ++order) {
    std::set<CanonicalForm> seen;
    std::vector<Edge> edges;
    const auto newcomer = static_cast<Vertex>(order - 1);
    for (const Graph& base : level) {
      for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << (order - 1)); ++subset) {
        edges.assign(base.edges().begin(), base.edges().end());
        for (std::uint32_t s = subset; s; s &= s - 1) {
          edges.push_back({static_cast<Vertex>(std::countr_zero(s)), newcomer});
        }
        seen.insert(canonical_form(Graph::unchecked_from_edges(order, edges)));
      }
    }
    level.clear();
    for (const auto& form : seen) level.push_back(graph_from_canonical(form));
  }
  return level;
}

IngestStats ingest_graph6_stream(const std::filesystem::path& path, const GraphVisitor& visit) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  IngestStats stats;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || (line_no == 1 && line == ">>graph6<<")) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    if (!g.is_connected()) {
      ++stats.skipped_disconnected;
      continue;
    }
    ++stats.parsed;
    visit(g);
  }
  return stats;
}

std::uint64_t enumerate_connected(const EnumerationConfig& config, const GraphVisitor& visit) {
  if (config.input) {
    if (!config.dedupe) return ingest_graph6_stream(*config.input, visit).parsed;
    std::set<CanonicalForm> seen;
    ingest_graph6_stream(*config.input, [&](const Graph& g) { seen.insert(canonical_form(g)); });
    for (const auto& form : seen) visit(graph_from_canonical(form));
    return seen.size();
  }

  require_internal_order(config.n);
  std::uint64_t visited = 0;
  if (config.dedupe) {
    for (const Graph& g : all_graphs_up_to_isomorphism(config.n)) {
      if (!g.is_connected()) continue;
      visit(g);
      ++visited;
    }
    return visited;
  }
  const std::uint64_t chunks = config.n == 1 ? 1 : std::uint64_t{1} << (config.n - 1);
  for (std::uint64_t c = 0; c < chunks; ++c) visited += enumerate_connected_labeled_chunk(config.n, c, visit);
  return visited;
}

namespace {

struct Extremes {
  bool any = false;
  std::int64_t min_value = 0;
  std::int64_t max_value = 0;
  std::vector<Graph> min_graphs;
  std::vector<Graph> max_graphs;

  void offer(const Graph& g, std::int64_t value) {
    if (!any || value < min_value) {
      min_value = value;
      min_graphs.clear();
    }
    if (!any || value > max_value) {
      max_value = value;
      max_graphs.clear();
    }
    any = true;
    if (value == min_value) min_graphs.push_back(g);
    if (value == max_value) max_graphs.push_back(g);
  }

  void merge(const Extremes& other) {
    if (!other.any) return;
    if (!any) {
      *this = other;
      return;
    }
    auto take = [](std::int64_t& mine, std::vector<Graph>& graphs, std::int64_t theirs,
                   const std::vector<Graph>& their_graphs, bool want_less) {
      if (theirs == mine) {
        graphs.insert(graphs.end(), their_graphs.begin(), their_graphs.end());
      } else if ((theirs < mine) == want_less) {
        mine = theirs;
        graphs = their_graphs;
      }
    };
    take(min_value, min_graphs, other.min_value, other.min_graphs, true);
    take(max_value, max_graphs, other.max_value, other.max_graphs, false);
  }
};

std::vector<std::string> witness_strings(const std::vector<Graph>& graphs) {
  std::set<std::string> unique;
  for (const Graph& g : graphs) {
    unique.insert(g.order() <= kMaxCanonicalOrder ? canonical_graph6(g) : to_graph6(g));
  }
  return {unique.begin(), unique.end()};
}

}  // namespace

ExtremalResult extremal_search(const EnumerationConfig& config, Objective objective) {
  ExtremalResult result;
  result.objective = objective;
  Extremes extremes;

  auto value_of = [objective](const Graph& g) { return select(compute_indices(g), objective); };

  if (config.input) {
    if (config.dedupe) {
      result.examined = enumerate_connected(config, [&](const Graph& g) { extremes.offer(g, value_of(g)); });
    } else {
      const auto stats = ingest_graph6_stream(*config.input, [&](const Graph& g) { extremes.offer(g, value_of(g)); });
      result.examined = stats.parsed;
      result.skipped_disconnected = stats.skipped_disconnected;
    }
  } else if (config.dedupe || config.n == 1) {
    result.n = config.n;
    result.examined = enumerate_connected(config, [&](const Graph& g) { extremes.offer(g, value_of(g)); });
  } else {
    result.n = config.n;
    require_internal_order(config.n);
    const std::size_t chunks = std::size_t{1} << (config.n - 1);
    std::vector<Extremes> partial(chunks);
    std::vector<std::uint64_t> counts(chunks, 0);
    parallel_for(chunks, worker_count(), [&](std::size_t c) {
      counts[c] = enumerate_connected_labeled_chunk(config.n, c, [&](const Graph& g) { partial[c].offer(g, value_of(g)); });
    });
    for (std::size_t c = 0; c < chunks; ++c) {
      extremes.merge(partial[c]);
      result.examined += counts[c];
    }
  }

  if (extremes.any) {
    result.min_value = extremes.min_value;
    result.max_value = extremes.max_value;
    result.min_witnesses = witness_strings(extremes.min_graphs);
    result.max_witnesses = witness_strings(extremes.max_graphs);
  }
  return result;
}

}  // namespace topoindex
