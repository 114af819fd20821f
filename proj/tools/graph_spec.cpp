#include "graph_spec.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <filesystem>

#include "topoindex/error.hpp"
#include "topoindex/generators.hpp"
#include "topoindex/io.hpp"

namespace topoindex::cli {

const char* const kGeneratorHelp =
    "Graph inputs are files (edge list \"n m\" + \"u v\" lines, or graph6 one per line)\n"
    "or generator specs name[:param[,param]...]:\n"
    "  path:N  star:N  cycle:N  complete:N  petersen  turan:N:R  kpartite:A,B,...";

namespace {

constexpr std::array<std::string_view, 7> kNames{"path", "star", "cycle", "complete", "petersen", "turan", "kpartite"};

std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1);
  std::vector<std::size_t> cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::vector<std::int64_t> parse_params(std::string_view spec, std::string_view text) {
  std::vector<std::int64_t> out;
  while (!text.empty()) {
    const auto cut = text.find_first_of(":,");
    const auto token = text.substr(0, cut);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 0) {
      throw ParseError(0, "bad parameter '" + std::string(token) + "' in '" + std::string(spec) + "'");
    }
    out.push_back(value);
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  return out;
}

void expect_params(std::string_view spec, const std::vector<std::int64_t>& params, std::size_t count) {
  if (params.size() != count) {
    throw ParseError(0, "'" + std::string(spec) + "' expects " + std::to_string(count) + " parameter(s)");
  }
}

}  // namespace

bool looks_like_generator(std::string_view spec) {
  const auto name = spec.substr(0, spec.find(':'));
  return std::find(kNames.begin(), kNames.end(), name) != kNames.end();
}

Graph build_generator(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto name = spec.substr(0, colon);
  const auto params = colon == std::string_view::npos ? std::vector<std::int64_t>{} : parse_params(spec, spec.substr(colon + 1));
  auto size = [&](std::size_t i) { return static_cast<std::size_t>(params[i]); };

  if (name == "path") {
    expect_params(spec, params, 1);
    return path(size(0));
  }
  if (name == "star") {
    expect_params(spec, params, 1);
    return star(size(0));
  }
  if (name == "cycle") {
    expect_params(spec, params, 1);
    return cycle(size(0));
  }
  if (name == "complete") {
    expect_params(spec, params, 1);
    return complete(size(0));
  }
  if (name == "petersen") {
    expect_params(spec, params, 0);
    return petersen();
  }
  if (name == "turan") {
    expect_params(spec, params, 2);
    return turan(size(0), size(1));
  }
  if (name == "kpartite") {
    if (params.size() < 2) throw ParseError(0, "'kpartite' expects at least 2 part sizes");
    return complete_multipartite(PartitionSpec(params));
  }

  const auto best = std::min_element(kNames.begin(), kNames.end(), [&](auto a, auto b) {
    return edit_distance(name, a) < edit_distance(name, b);
  });
  throw ParseError(0, "unknown generator '" + std::string(name) + "'; did you mean '" + std::string(*best) + "'?");
}

std::vector<Graph> resolve_input(const std::string& input) {
  if (looks_like_generator(input)) return {build_generator(input)};
  if (std::filesystem::exists(input)) return read_graph_file(input);
  if (input.find(':') != std::string::npos) return {build_generator(input)};
  throw ParseError(0, "'" + input + "' is neither a generator spec nor a readable file");
}

}  // namespace topoindex::cli
