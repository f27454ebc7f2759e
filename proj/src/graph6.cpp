#include <cstdint>
#include <string>

#include "cylrig/error.hpp"
#include "cylrig/graph.hpp"

namespace cylrig {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int decode_byte(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
  int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6: byte out of range 63..126", pos);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  std::size_t pos = 0;
  if (line.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

  long n = decode_byte(line, pos);
  ++pos;
  if (n == 63) {
    // 126 followed by three 6-bit groups; 126 126 (eight-byte form) is rejected.
    if (pos < line.size() && static_cast<unsigned char>(line[pos]) == 126) {
      throw ParseError("graph6: graphs with more than 258047 vertices are not supported", pos);
    }
    n = 0;
    for (int i = 0; i < 3; ++i, ++pos) n = (n << 6) | decode_byte(line, pos);
  }

  const std::int64_t bits = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) + " edge bytes for " + std::to_string(n) +
                         " vertices, found " + std::to_string(line.size() - pos),
                     line.size() < pos + bytes ? line.size() : pos + bytes);
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      std::size_t at = pos + static_cast<std::size_t>(k / 6);
      int value = decode_byte(line, at);
      if (value & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  // Trailing padding bits must be zero.
  for (; k % 6 != 0; ++k) {
    std::size_t at = pos + static_cast<std::size_t>(k / 6);
    if (decode_byte(line, at) & (1 << (5 - k % 6))) throw ParseError("graph6: non-zero padding bit", at);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  const long n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t line_no = 0, start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.offset());
      }
    }
    start = end + 1;
  }
  return out;
}

}  // namespace cylrig
