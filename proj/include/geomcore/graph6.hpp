#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "geomcore/error.hpp"
#include "geomcore/graph.hpp"

// graph6: a length header N(n) followed by the upper triangle of the
// adjacency matrix in column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...),
// packed six bits per byte, most significant first, each byte offset by 63.
namespace geomcore::graph6 {

namespace detail {

inline void append_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

}  // namespace detail

inline std::string encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  detail::append_size(out, n);
  int acc = 0;
  int bits = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph decode(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: character out of range", i);
  }
  if (text.empty()) throw ParseError("graph6: missing length header", 0);

  auto value = [&](std::size_t i) { return static_cast<std::uint64_t>(static_cast<unsigned char>(text[i]) - 63); };
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (value(0) < 63) {
    n = value(0);
    pos = 1;
  } else if (text.size() >= 2 && value(1) == 63) {
    if (text.size() < 8) throw ParseError("graph6: truncated 8-byte length header", text.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    pos = 8;
  } else {
    if (text.size() < 4) throw ParseError("graph6: truncated 4-byte length header", text.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | value(i);
    pos = 4;
  }
  if (n > Graph::kMaxVertices) throw ParseError("graph6: vertex count exceeds 2^16", 0);

  const std::uint64_t pair_bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t data_bytes = (pair_bits + 5) / 6;
  if (text.size() - pos < data_bytes) throw ParseError("graph6: adjacency data too short", text.size());
  if (text.size() - pos > data_bytes) throw ParseError("graph6: unexpected trailing bytes", pos + data_bytes);

  GraphBuilder b(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const std::size_t byte = pos + k / 6;
      if ((value(byte) >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  if (pair_bits % 6 != 0) {
    const std::size_t last = pos + data_bytes - 1;
    const auto pad = static_cast<unsigned>(6 - pair_bits % 6);
    if (value(last) & ((1U << pad) - 1)) throw ParseError("graph6: nonzero padding bits", last);
  }
  return std::move(b).build();
}

// One entry per non-empty input line: the graph, or the parse error message.
struct FileEntry {
  std::size_t line = 0;
  std::variant<Graph, std::string> value;
  bool ok() const { return std::holds_alternative<Graph>(value); }
  const Graph& graph() const { return std::get<Graph>(value); }
  const std::string& error() const { return std::get<std::string>(value); }
};

// Reads a graph6 file, one graph per line. The optional ">>graph6<<" header
// is accepted on any line. Parse errors are collected, not thrown.
inline std::vector<FileEntry> read_file(std::istream& in) {
  std::vector<FileEntry> out;
  std::string line;
  std::size_t lineno = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view body = line;
    if (body.starts_with(kHeader)) body.remove_prefix(kHeader.size());
    if (body.empty()) continue;
    try {
      out.push_back({lineno, decode(body)});
    } catch (const ParseError& e) {
      out.push_back({lineno, std::string("line ") + std::to_string(lineno) + ": " + e.what()});
    }
  }
  return out;
}

}  // namespace geomcore::graph6
