#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "topoindex/graph.hpp"
#include "topoindex/indices.hpp"

namespace topoindex {

/// Internal generation is limited to this order (2^28 labeled graphs).
inline constexpr std::size_t kMaxEnumerationOrder = 8;

struct EnumerationConfig {
  std::size_t n = 1;
  /// One representative per isomorphism class instead of every labeled graph.
  bool dedupe = false;
  /// Read graphs from a graph6 file instead of generating them; n is then ignored.
  std::optional<std::filesystem::path> input;
};

using GraphVisitor = std::function<void(const Graph&)>;

/// Visits every connected graph on n labeled vertices exactly once, or with
/// `dedupe` one canonical representative per isomorphism class (in
/// increasing canonical order). With `input`, visits the connected graphs of
/// the file, deduplicated by canonical form if requested. Returns the number
/// of graphs visited.
std::uint64_t enumerate_connected(const EnumerationConfig& config, const GraphVisitor& visit);

/// Labeled connected graphs whose vertex-0 neighborhood is `chunk` (bit j−1
/// set means 0 ~ j). chunk ranges over [0, 2^{n−1}); together the chunks
/// cover the labeled space once, which is how work is fanned out.
std::uint64_t enumerate_connected_labeled_chunk(std::size_t n, std::uint64_t chunk, const GraphVisitor& visit);

/// Canonical representatives of all graphs on n vertices (connected or not),
/// built by adding a vertex to every graph on n − 1 vertices in every way.
std::vector<Graph> all_graphs_up_to_isomorphism(std::size_t n);

struct IngestStats {
  std::uint64_t parsed = 0;
  std::uint64_t skipped_disconnected = 0;
};

/// Streams newline-separated graph6 from a file. Disconnected graphs are
/// skipped and counted; malformed lines raise ParseError with the line number.
IngestStats ingest_graph6_stream(const std::filesystem::path& path, const GraphVisitor& visit);

struct ExtremalResult {
  Objective objective = Objective::PiW;
  std::optional<std::size_t> n;
  std::uint64_t examined = 0;
  std::int64_t min_value = 0;
  std::vector<std::string> min_witnesses;
  std::int64_t max_value = 0;
  std::vector<std::string> max_witnesses;
  std::uint64_t skipped_disconnected = 0;
};

/// Exact min and max of `objective` over the configured graphs. Witnesses are
/// reported once per isomorphism class as canonical graph6, sorted.
ExtremalResult extremal_search(const EnumerationConfig& config, Objective objective);

}  // namespace topoindex
