#include "topoindex/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "topoindex/error.hpp"

namespace topoindex {

namespace {

constexpr int kBias = 63;
constexpr std::uint64_t kOneByteMax = 62;
constexpr std::uint64_t kFourByteMax = 258047;
constexpr std::uint64_t kEightByteMax = 68719476735ULL;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto cut = text.find('\n');
    lines.push_back(text.substr(0, cut));
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  return lines;
}

// Whitespace-separated unsigned integers on one line.
bool parse_uints(std::string_view line, std::vector<std::uint64_t>& out) {
  out.clear();
  line = trim(line);
  while (!line.empty()) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc{} || ptr == line.data()) return false;
    out.push_back(value);
    line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
    if (!line.empty() && line.front() != ' ' && line.front() != '\t') return false;
    line = trim(line);
  }
  return true;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<std::uint64_t> nums;
  std::size_t i = 0;
  auto next_content = [&]() -> std::ptrdiff_t {
    while (i < lines.size() && trim(lines[i]).empty()) ++i;
    return i < lines.size() ? static_cast<std::ptrdiff_t>(i++) : -1;
  };

  const auto header = next_content();
  if (header < 0) throw ParseError(0, "empty edge list");
  if (!parse_uints(lines[static_cast<std::size_t>(header)], nums) || nums.size() != 2) {
    throw ParseError(static_cast<std::size_t>(header) + 1, "expected header \"n m\"");
  }
  const std::uint64_t n = nums[0];
  const std::uint64_t m = nums[1];
  if (n == 0) throw ParseError(static_cast<std::size_t>(header) + 1, "n must be at least 1");

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t k = 0; k < m; ++k) {
    const auto at = next_content();
    if (at < 0) throw ParseError(lines.size(), "expected " + std::to_string(m) + " edges, found " + std::to_string(k));
    const auto line_no = static_cast<std::size_t>(at) + 1;
    if (!parse_uints(lines[static_cast<std::size_t>(at)], nums) || nums.size() != 2) {
      throw ParseError(line_no, "expected edge \"u v\"");
    }
    if (nums[0] >= n || nums[1] >= n) throw ParseError(line_no, "vertex id out of range");
    edges.push_back({static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1])});
  }
  if (next_content() >= 0) throw ParseError(i, "trailing content after " + std::to_string(m) + " edges");
  try {
    return Graph::unchecked_from_edges(n, edges);
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  if (line.empty()) throw ParseError(0, "empty graph6 string");
  for (char c : line) {
    if (c < 63 || c > 126) throw ParseError(0, "byte outside graph6 range 63..126");
  }
  auto digit = [&](std::size_t k) { return static_cast<std::uint64_t>(line[k] - kBias); };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (line[0] != 126) {
    n = digit(0);
    pos = 1;
  } else if (line.size() >= 2 && line[1] != 126) {
    if (line.size() < 4) throw ParseError(0, "truncated size header");
    n = (digit(1) << 12) | (digit(2) << 6) | digit(3);
    if (n <= kOneByteMax) throw ParseError(0, "non-minimal size header");
    pos = 4;
  } else {
    if (line.size() < 8) throw ParseError(0, "truncated size header");
    for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | digit(k);
    if (n <= kFourByteMax) throw ParseError(0, "non-minimal size header");
    pos = 8;
  }
  if (n == 0) throw ParseError(0, "graph has no vertices");
  if (n > UINT32_MAX) throw ParseError(0, "graph too large");

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes) {
    throw ParseError(0, "expected " + std::to_string(bytes) + " adjacency bytes, found " +
                            std::to_string(line.size() - pos));
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const auto byte = digit(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) edges.push_back({i, j});
    }
  }
  if (k % 6 != 0 && (digit(pos + k / 6) & ((1U << (6 - k % 6)) - 1)) != 0) {
    throw ParseError(0, "nonzero padding bits");
  }
  return Graph::unchecked_from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= kOneByteMax) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= kFourByteMax) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else if (n <= kEightByteMax) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    throw Error(ErrorCode::TooLarge, "graph6 supports at most 68719476735 vertices");
  }

  const std::uint64_t bits = n * (n - 1) / 2;
  std::vector<std::uint8_t> packed((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    const std::uint64_t k = std::uint64_t{e.v} * (e.v - 1) / 2 + e.u;
    packed[k / 6] |= static_cast<std::uint8_t>(1U << (5 - k % 6));
  }
  for (auto b : packed) out.push_back(static_cast<char>(b + kBias));
  return out;
}

GraphFileFormat sniff_format(std::string_view text) {
  std::vector<std::uint64_t> nums;
  for (auto line : split_lines(text)) {
    if (trim(line).empty()) continue;
    return parse_uints(line, nums) && nums.size() == 2 ? GraphFileFormat::EdgeList : GraphFileFormat::Graph6;
  }
  return GraphFileFormat::Graph6;
}

std::vector<Graph> read_graph_file(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (sniff_format(text) == GraphFileFormat::EdgeList) return {parse_edge_list(text)};

  std::vector<Graph> out;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto line = trim(lines[i]);
    if (line.empty()) continue;
    if (i == 0 && line == ">>graph6<<") continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Error& e) {
      throw ParseError(i + 1, e.what());
    }
  }
  return out;
}

}  // namespace topoindex
