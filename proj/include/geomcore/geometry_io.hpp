#pragma once

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "geomcore/error.hpp"
#include "geomcore/geometry.hpp"

// Plain-text geometry files.
//
//   design:     "v k", then one block per line (0-based points)
//   oa:         "k n", then n^2 lines of k symbols, one per column
//   incidence:  "incidence P", then one line of the geometry per line
//
// '#' starts a comment. A comment of the form "# family: design|oa|gq" pins
// the family; without it the two-number headers are told apart by the
// shape of the data.
namespace geomcore::io {

namespace detail {

struct Row {
  std::size_t lineno = 0;
  std::size_t offset = 0;
  std::vector<int> values;
};

struct TextFile {
  std::optional<std::string> family_tag;
  std::vector<Row> rows;
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline TextFile read_rows(std::istream& in) {
  TextFile out;
  std::string line;
  std::size_t lineno = 0;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t line_offset = offset;
    offset += line.size() + 1;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) {
      std::string_view comment = trim(body.substr(hash + 1));
      if (comment.starts_with("family:")) out.family_tag = std::string(trim(comment.substr(7)));
      body = body.substr(0, hash);
    }
    body = trim(body);
    if (body.empty()) continue;
    Row row{lineno, line_offset, {}};
    if (out.rows.empty() && body.starts_with("incidence")) {
      out.family_tag = out.family_tag.value_or("incidence");
      row.values.push_back(-1);  // marker, replaced below
      body = trim(body.substr(9));
    }
    std::size_t pos = 0;
    while (pos < body.size()) {
      while (pos < body.size() && (body[pos] == ' ' || body[pos] == '\t')) ++pos;
      if (pos >= body.size()) break;
      int value = 0;
      auto [ptr, ec] = std::from_chars(body.data() + pos, body.data() + body.size(), value);
      if (ec != std::errc() || value < 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected a non-negative integer",
                         line_offset + (body.data() - line.data()) + pos);
      pos = static_cast<std::size_t>(ptr - body.data());
      if (pos < body.size() && body[pos] != ' ' && body[pos] != '\t')
        throw ParseError("line " + std::to_string(lineno) + ": unexpected character",
                         line_offset + (body.data() - line.data()) + pos);
      row.values.push_back(value);
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

inline bool all_rows_have(const std::vector<Row>& rows, std::size_t width) {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].values.size() != width) return false;
  return true;
}

inline const Row& header(const TextFile& f) {
  if (f.rows.empty()) throw ParseError("empty geometry file", 0);
  return f.rows.front();
}

inline std::vector<std::vector<int>> body_rows(const TextFile& f) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 1; i < f.rows.size(); ++i) out.push_back(f.rows[i].values);
  return out;
}

inline void require_two_numbers(const Row& h, const char* what) {
  if (h.values.size() != 2 || h.values[0] < 0)
    throw ParseError("line " + std::to_string(h.lineno) + ": header must be \"" + what + "\"", h.offset);
}

}  // namespace detail

inline Design parse_design(const detail::TextFile& f) {
  const auto& h = detail::header(f);
  detail::require_two_numbers(h, "v k");
  const int v = h.values[0], k = h.values[1];
  for (std::size_t i = 1; i < f.rows.size(); ++i)
    for (int p : f.rows[i].values)
      if (p >= v)
        throw ParseError("line " + std::to_string(f.rows[i].lineno) + ": point " + std::to_string(p) + " >= v",
                         f.rows[i].offset);
  return validate_design(v, k, detail::body_rows(f));
}

inline OrthogonalArray parse_oa(const detail::TextFile& f) {
  const auto& h = detail::header(f);
  detail::require_two_numbers(h, "k n");
  const int k = h.values[0], n = h.values[1];
  if (static_cast<long long>(f.rows.size()) - 1 != static_cast<long long>(n) * n)
    throw ParseError("expected n^2 = " + std::to_string(n * n) + " data lines, found " +
                         std::to_string(f.rows.size() - 1),
                     h.offset);
  for (std::size_t i = 1; i < f.rows.size(); ++i)
    if (static_cast<int>(f.rows[i].values.size()) != k)
      throw ParseError("line " + std::to_string(f.rows[i].lineno) + ": expected k = " + std::to_string(k) + " symbols",
                       f.rows[i].offset);
  return validate_oa(k, n, detail::body_rows(f));
}

inline IncidenceStructure parse_incidence(const detail::TextFile& f) {
  const auto& h = detail::header(f);
  if (h.values.size() != 2 || h.values[0] != -1)
    throw ParseError("line " + std::to_string(h.lineno) + ": header must be \"incidence P\"", h.offset);
  const int points = h.values[1];
  for (std::size_t i = 1; i < f.rows.size(); ++i)
    for (int p : f.rows[i].values)
      if (p >= points)
        throw ParseError("line " + std::to_string(f.rows[i].lineno) + ": point " + std::to_string(p) + " >= P",
                         f.rows[i].offset);
  return IncidenceStructure(points, detail::body_rows(f));
}

// Reads any of the three formats and returns the validated geometry. Files
// tagged "gq" must validate with alpha = 1.
inline Geometry read_geometry(std::istream& in) {
  const auto f = detail::read_rows(in);
  const auto& h = detail::header(f);
  std::string family = f.family_tag.value_or("");
  if (family.empty()) {
    if (h.values.size() != 2) throw ParseError("unrecognised geometry header", h.offset);
    const long long a = h.values[0], b = h.values[1];
    const long long data = static_cast<long long>(f.rows.size()) - 1;
    const bool design_shape = b >= 2 && a > b && detail::all_rows_have(f.rows, static_cast<std::size_t>(b)) &&
                              a * (a - 1) == data * b * (b - 1);
    const bool oa_shape = detail::all_rows_have(f.rows, static_cast<std::size_t>(a)) && data == b * b;
    if (design_shape == oa_shape)
      throw ParseError("cannot tell design from OA; add a \"# family: design\" or \"# family: oa\" comment",
                       h.offset);
    family = design_shape ? "design" : "oa";
  }
  if (family == "design") return design_to_geometry(parse_design(f));
  if (family == "oa") return oa_to_geometry(parse_oa(f));
  if (family == "gq" || family == "incidence" || family == "geometry") {
    Geometry g = make_geometry(parse_incidence(f));
    if (family == "gq" && g.family != Family::Quadrangle)
      throw ValidationError("axiom 3", "file is tagged gq but alpha = " + std::to_string(g.params.alpha), {});
    return g;
  }
  throw ParseError("unknown family tag \"" + family + "\"", 0);
}

inline Geometry read_geometry(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_geometry(in);
}

inline void write_rows(std::ostream& out, const std::vector<std::vector<int>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
}

inline void write_design(std::ostream& out, const Design& d) {
  out << "# family: design\n" << d.v << ' ' << d.k << '\n';
  write_rows(out, d.blocks);
}

inline void write_oa(std::ostream& out, const OrthogonalArray& a) {
  out << "# family: oa\n" << a.k << ' ' << a.n << '\n';
  write_rows(out, a.columns);
}

inline void write_incidence(std::ostream& out, const IncidenceStructure& s, bool quadrangle) {
  if (quadrangle) out << "# family: gq\n";
  out << "incidence " << s.point_count() << '\n';
  write_rows(out, s.lines());
}

inline void write_geometry(std::ostream& out, const Geometry& g) {
  switch (g.family) {
    case Family::Design: write_design(out, *g.design); return;
    case Family::OrthogonalArray: write_oa(out, *g.oa); return;
    case Family::Quadrangle: write_incidence(out, g.structure, true); return;
    case Family::Generic: write_incidence(out, g.structure, false); return;
  }
}

}  // namespace geomcore::io
