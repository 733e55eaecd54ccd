#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "geomcore/error.hpp"
#include "geomcore/graph.hpp"

namespace geomcore {

// Partial geometry parameters: lines have s+1 points, points lie on t+1
// lines, and a point off a line is collinear with exactly alpha of its points.
struct PgParams {
  int s = 0;
  int t = 0;
  int alpha = 0;

  bool satisfies_range() const {
    return s >= 1 && t >= 1 && alpha >= 1 && alpha <= std::min(s + 1, t + 1);
  }
  bool is_quadrangle() const { return alpha == 1; }
  bool is_design_type() const { return alpha == t + 1; }
  friend bool operator==(const PgParams&, const PgParams&) = default;
};

struct SrgSpectrum {
  SrgParams params;
  int theta = 0;
  int tau = 0;
  long long m_theta = 0;
  long long m_tau = 0;
};

struct Fraction {
  long long num = 0;
  long long den = 1;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

inline Fraction reduced(long long num, long long den) {
  if (den < 0) num = -num, den = -den;
  const long long g = std::gcd(num, den);
  return g == 0 ? Fraction{num, den} : Fraction{num / g, den / g};
}

// Points 0..point_count-1; each line is a sorted point set and the line list
// itself is sorted, so equal structures compare equal.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  IncidenceStructure(int point_count, std::vector<std::vector<int>> lines) : point_count_(point_count) {
    if (point_count <= 0) throw ValidationError("incidence", "structure has no points", {});
    for (auto& line : lines) {
      std::sort(line.begin(), line.end());
      if (line.size() < 2) throw ValidationError("incidence", "line with fewer than 2 points", line);
      if (std::adjacent_find(line.begin(), line.end()) != line.end())
        throw ValidationError("incidence", "line repeats a point", line);
      if (line.front() < 0 || line.back() >= point_count)
        throw ValidationError("incidence", "point index out of range", line);
    }
    std::sort(lines.begin(), lines.end());
    if (auto it = std::adjacent_find(lines.begin(), lines.end()); it != lines.end())
      throw ValidationError("incidence", "repeated line", *it);
    lines_ = std::move(lines);
  }

  int point_count() const { return point_count_; }
  int line_count() const { return static_cast<int>(lines_.size()); }
  const std::vector<std::vector<int>>& lines() const { return lines_; }
  const std::vector<int>& line(int i) const { return lines_[i]; }

  // lines_through()[p] = sorted indices of the lines containing p.
  std::vector<std::vector<int>> lines_through() const {
    std::vector<std::vector<int>> out(point_count_);
    for (int l = 0; l < line_count(); ++l)
      for (int p : lines_[l]) out[p].push_back(l);
    return out;
  }

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;

 private:
  int point_count_ = 0;
  std::vector<std::vector<int>> lines_;
};

// 2-(v,k,1) design. Blocks keep their input order (block indices are the
// geometry point indices of the derived geometry); each block is sorted.
struct Design {
  int v = 0;
  int k = 0;
  std::vector<std::vector<int>> blocks;
};

// OA(k,n): k rows over symbols 0..n-1, n^2 columns. columns[c][r] is the
// symbol in row r of column c.
struct OrthogonalArray {
  int k = 0;
  int n = 0;
  std::vector<std::vector<int>> columns;

  int symbol(int row, int column) const { return columns[column][row]; }
};

enum class Family { Design, OrthogonalArray, Quadrangle, Generic };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::Design: return "design";
    case Family::OrthogonalArray: return "oa";
    case Family::Quadrangle: return "gq";
    case Family::Generic: return "geometry";
  }
  return "geometry";
}

// A validated geometry together with the combinatorial object it came from.
struct Geometry {
  IncidenceStructure structure;
  PgParams params;
  Family family = Family::Generic;
  std::optional<Design> design;
  std::optional<OrthogonalArray> oa;
};

// Point graph plus the line -> clique map (line i is the clique lines()[i]).
struct PointGraph {
  Graph graph;
  std::vector<std::vector<int>> line_cliques;

  bool is_line(const std::vector<int>& sorted_clique) const {
    return std::binary_search(line_cliques.begin(), line_cliques.end(), sorted_clique);
  }
  // True iff the vertex set lies inside a single line.
  bool inside_some_line(const std::vector<int>& sorted_set) const {
    return std::any_of(line_cliques.begin(), line_cliques.end(), [&](const std::vector<int>& line) {
      return std::includes(line.begin(), line.end(), sorted_set.begin(), sorted_set.end());
    });
  }
};

inline PointGraph point_graph(const IncidenceStructure& s) {
  GraphBuilder b(s.point_count());
  for (const auto& line : s.lines())
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j) b.add_edge(line[i], line[j]);
  return PointGraph{std::move(b).build(), s.lines()};
}

// Checks the three partial-geometry axioms and returns (s, t, alpha).
inline PgParams validate_geometry(const IncidenceStructure& s) {
  if (s.point_count() <= 0 || s.line_count() == 0) throw ValidationError("axiom 2", "structure has no lines", {});

  // Axiom 1: two distinct points share at most one line (equivalently two
  // lines meet in at most one point).
  std::map<std::pair<int, int>, int> joining;
  for (int l = 0; l < s.line_count(); ++l) {
    const auto& line = s.line(l);
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j) {
        auto [it, inserted] = joining.emplace(std::make_pair(line[i], line[j]), l);
        if (!inserted)
          throw ValidationError("axiom 1", "lines " + std::to_string(it->second) + " and " + std::to_string(l) +
                                               " share two points",
                                {it->second, l, line[i], line[j]});
      }
  }

  // Axiom 2.
  const int line_size = static_cast<int>(s.line(0).size());
  for (int l = 1; l < s.line_count(); ++l)
    if (static_cast<int>(s.line(l).size()) != line_size)
      throw ValidationError("axiom 2", "line " + std::to_string(l) + " has " + std::to_string(s.line(l).size()) +
                                           " points, line 0 has " + std::to_string(line_size),
                            {0, l});
  const auto through = s.lines_through();
  const int per_point = static_cast<int>(through[0].size());
  for (int p = 1; p < s.point_count(); ++p)
    if (static_cast<int>(through[p].size()) != per_point)
      throw ValidationError("axiom 2", "point " + std::to_string(p) + " lies on " +
                                           std::to_string(through[p].size()) + " lines, point 0 on " +
                                           std::to_string(per_point),
                            {0, p});
  if (per_point < 2) throw ValidationError("axiom 2", "every point lies on a single line (t = 0)", {0});

  // Axiom 3: a point P off a line l is collinear with exactly alpha of its
  // points; each such point contributes a distinct line through P.
  const Graph g = point_graph(s).graph;
  int alpha = -1;
  int alpha_point = -1;
  int alpha_line = -1;
  for (int l = 0; l < s.line_count(); ++l) {
    Bitset on_line(s.point_count());
    for (int p : s.line(l)) on_line.set(p);
    for (int p = 0; p < s.point_count(); ++p) {
      if (on_line.test(p)) continue;
      const int seen = static_cast<int>(g.neighbors(p).count_and(on_line));
      if (alpha < 0) {
        alpha = seen;
        alpha_point = p;
        alpha_line = l;
      } else if (seen != alpha) {
        throw ValidationError("axiom 3", "point " + std::to_string(p) + " sees " + std::to_string(seen) +
                                             " points of line " + std::to_string(l) + ", point " +
                                             std::to_string(alpha_point) + " sees " + std::to_string(alpha) +
                                             " of line " + std::to_string(alpha_line),
                              {p, l, alpha_point, alpha_line});
      }
    }
  }
  if (alpha < 1) throw ValidationError("axiom 3", "no point is collinear with a point of a line it misses", {});
  PgParams out{line_size - 1, per_point - 1, alpha};
  if (!out.satisfies_range()) throw ValidationError("axiom 3", "parameters out of range", {out.s, out.t, out.alpha});
  return out;
}

// Exchange points and lines: dual point i is line i of s; dual line p is the
// set of lines through point p.
inline IncidenceStructure dual(const IncidenceStructure& s) {
  validate_geometry(s);
  return IncidenceStructure(s.line_count(), s.lines_through());
}

// Strongly regular parameters and spectrum of the point graph of PG(s,t,alpha).
// The tau-multiplicity is taken from the trace condition (1 + m_theta + m_tau = n).
inline SrgSpectrum pg_srg_params(const PgParams& p) {
  if (!p.satisfies_range()) throw PreconditionError("pg_srg_params: require 1 <= alpha <= min(s+1, t+1), s, t >= 1");
  const long long s = p.s, t = p.t, a = p.alpha;
  const long long n_num = (s * t + a) * (s + 1);
  if (n_num % a != 0) throw InfeasibleError("pg_srg_params: vertex count (st+alpha)(s+1)/alpha is not integral");
  const long long mt_num = s * t * (s + 1) * (t + 1);
  const long long mt_den = a * (s + t + 1 - a);
  if (mt_num % mt_den != 0) throw InfeasibleError("pg_srg_params: multiplicity of s-alpha is not integral");
  SrgSpectrum out;
  out.params = SrgParams{static_cast<int>(n_num / a), static_cast<int>((t + 1) * s),
                         static_cast<int>((s - 1) + t * (a - 1)), static_cast<int>((t + 1) * a)};
  out.theta = static_cast<int>(s - a);
  out.tau = static_cast<int>(-1 - t);
  out.m_theta = mt_num / mt_den;
  out.m_tau = out.params.n - 1 - out.m_theta;
  return out;
}

// (st + alpha)(s + 1 - alpha) / (alpha (s + t + 1 - alpha)): a closed form
// sometimes quoted for the tau-multiplicity. It disagrees with the trace
// condition (e.g. 5/2 instead of 5 for GQ(2,2)) and is kept only so the
// discrepancy stays under test.
inline Fraction quoted_m_tau_expression(const PgParams& p) {
  const long long s = p.s, t = p.t, a = p.alpha;
  return reduced((s * t + a) * (s + 1 - a), a * (s + t + 1 - a));
}

inline Design validate_design(int v, int k, std::vector<std::vector<int>> blocks) {
  if (k < 2 || v < k) throw ValidationError("design", "require 2 <= k <= v", {v, k});
  std::vector<std::vector<int>> cover(v, std::vector<int>(v, -1));
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    auto& block = blocks[b];
    std::sort(block.begin(), block.end());
    if (static_cast<int>(block.size()) != k)
      throw ValidationError("design", "block " + std::to_string(b) + " does not have k points", {b});
    if (block.front() < 0 || block.back() >= v)
      throw ValidationError("design", "block " + std::to_string(b) + " has a point out of range", {b});
    if (std::adjacent_find(block.begin(), block.end()) != block.end())
      throw ValidationError("design", "block " + std::to_string(b) + " repeats a point", {b});
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        int& slot = cover[block[i]][block[j]];
        if (slot >= 0)
          throw ValidationError("design", "pair {" + std::to_string(block[i]) + "," + std::to_string(block[j]) +
                                              "} lies in blocks " + std::to_string(slot) + " and " +
                                              std::to_string(b),
                                {block[i], block[j], slot, b});
        slot = b;
      }
  }
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y)
      if (cover[x][y] < 0)
        throw ValidationError("design", "uncovered pair {" + std::to_string(x) + "," + std::to_string(y) + "}",
                              {x, y});
  return Design{v, k, std::move(blocks)};
}

inline OrthogonalArray validate_oa(int k, int n, std::vector<std::vector<int>> columns) {
  if (k < 2 || n < 1) throw ValidationError("oa", "require k >= 2 and n >= 1", {k, n});
  if (static_cast<int>(columns.size()) != n * n)
    throw ValidationError("oa", "expected n^2 = " + std::to_string(n * n) + " columns", {});
  for (int c = 0; c < n * n; ++c) {
    if (static_cast<int>(columns[c].size()) != k)
      throw ValidationError("oa", "column " + std::to_string(c) + " does not have k entries", {c});
    for (int x : columns[c])
      if (x < 0 || x >= n) throw ValidationError("oa", "column " + std::to_string(c) + " has a symbol out of range", {c});
  }
  for (int r1 = 0; r1 < k; ++r1)
    for (int r2 = r1 + 1; r2 < k; ++r2) {
      std::vector<int> seen(n * n, -1);
      for (int c = 0; c < n * n; ++c) {
        int& slot = seen[columns[c][r1] * n + columns[c][r2]];
        if (slot >= 0)
          throw ValidationError("oa", "rows " + std::to_string(r1) + " and " + std::to_string(r2) +
                                          " repeat a symbol pair in columns " + std::to_string(slot) + " and " +
                                          std::to_string(c),
                                {r1, r2, slot, c});
        slot = c;
      }
    }
  return OrthogonalArray{k, n, std::move(columns)};
}

// Block geometry of a design: points are blocks, line p is the set of blocks
// through design point p. PG((v-k)/(k-1), k-1, k).
inline Geometry design_to_geometry(const Design& d) {
  if (d.v <= d.k || (d.v - d.k) % (d.k - 1) != 0)
    throw Error("design_to_geometry: non-integral s = (v-k)/(k-1) for a validated design");
  std::vector<std::vector<int>> lines(d.v);
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b)
    for (int p : d.blocks[b]) lines[p].push_back(b);
  Geometry g;
  g.structure = IncidenceStructure(static_cast<int>(d.blocks.size()), std::move(lines));
  g.params = PgParams{(d.v - d.k) / (d.k - 1), d.k - 1, d.k};
  if (validate_geometry(g.structure) != g.params) throw Error("design_to_geometry: parameter mismatch");
  g.family = Family::Design;
  g.design = d;
  return g;
}

// Points are the n^2 columns; line (r, x) holds the columns with symbol x in
// row r. PG(n-1, k-1, k-1).
inline Geometry oa_to_geometry(const OrthogonalArray& a) {
  std::vector<std::vector<int>> lines(a.k * a.n);
  for (int c = 0; c < a.n * a.n; ++c)
    for (int r = 0; r < a.k; ++r) lines[r * a.n + a.symbol(r, c)].push_back(c);
  Geometry g;
  g.structure = IncidenceStructure(a.n * a.n, std::move(lines));
  g.params = PgParams{a.n - 1, a.k - 1, a.k - 1};
  if (validate_geometry(g.structure) != g.params) throw Error("oa_to_geometry: parameter mismatch");
  g.family = Family::OrthogonalArray;
  g.oa = a;
  return g;
}

// Wraps an incidence structure after validation; alpha = 1 marks a
// generalized quadrangle.
inline Geometry make_geometry(IncidenceStructure s) {
  Geometry g;
  g.params = validate_geometry(s);
  g.structure = std::move(s);
  g.family = g.params.is_quadrangle() ? Family::Quadrangle : Family::Generic;
  return g;
}

}  // namespace geomcore
