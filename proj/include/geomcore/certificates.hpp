#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "geomcore/error.hpp"
#include "geomcore/exact_cover.hpp"
#include "geomcore/geometry.hpp"
#include "geomcore/homsearch.hpp"
#include "geomcore/search_context.hpp"
#include "geomcore/vertex_map.hpp"

// Structural certificates for complete cores. Resolutions of a design,
// extension rows of an orthogonal array and ovoid partitions of a
// generalized quadrangle are all partitions of the geometry's points into
// sets meeting every line exactly once, so they share one encoding: first
// enumerate those sets by exact cover (lines covered by points), then cover
// the points by disjoint sets.
namespace geomcore {

inline constexpr std::size_t kDefaultTransversalLimit = 100'000;

// Parallel classes, as block-index sets.
struct Resolution {
  std::vector<std::vector<int>> classes;
};

// Symbols of a new row, one per column.
struct OaExtensionRow {
  std::vector<int> row;
};

struct OvoidPartition {
  std::vector<std::vector<int>> ovoids;
};

template <class Certificate>
struct CertificateSearch {
  Outcome outcome = Outcome::None;
  std::optional<Certificate> certificate;
  // Number of candidate classes (parallel classes, transversals, ovoids).
  std::size_t candidates = 0;
  std::string note;
  std::uint64_t nodes = 0;
};

struct TransversalSearch {
  Outcome outcome = Outcome::None;
  std::vector<std::vector<int>> sets;
  bool limit_hit = false;
};

namespace detail {

// Every point set meeting each line exactly once.
inline TransversalSearch line_transversals(const IncidenceStructure& s, SearchContext& ctx, std::size_t limit) {
  ExactCover ec(static_cast<std::size_t>(s.line_count()));
  for (const auto& lines : s.lines_through()) ec.add_option(lines);
  auto res = ec.solve_all(ctx, limit);
  TransversalSearch out;
  out.outcome = res.outcome;
  out.limit_hit = res.limit_hit;
  out.sets = std::move(res.solutions);  // option index = point index
  std::sort(out.sets.begin(), out.sets.end());
  return out;
}

// Partition of the points into members of `sets`, sorted by first point.
inline ExactCoverResult partition_points(int point_count, const std::vector<std::vector<int>>& sets, SearchContext& ctx) {
  ExactCover ec(static_cast<std::size_t>(point_count));
  for (const auto& set : sets) ec.add_option(set);
  return ec.solve_first(ctx);
}

struct PartitionSearch {
  Outcome outcome = Outcome::None;
  std::vector<std::vector<int>> classes;
  std::size_t candidates = 0;
  bool limit_hit = false;
  std::uint64_t nodes = 0;
};

inline PartitionSearch transversal_partition(const IncidenceStructure& s, SearchContext& ctx, std::size_t limit) {
  PartitionSearch out;
  const auto start = ctx.nodes();
  auto sets = line_transversals(s, ctx, limit);
  out.candidates = sets.sets.size();
  out.limit_hit = sets.limit_hit;
  if (sets.outcome == Outcome::Exhausted || sets.limit_hit) {
    out.outcome = Outcome::Exhausted;
    out.nodes = ctx.nodes() - start;
    return out;
  }
  auto cover = partition_points(s.point_count(), sets.sets, ctx);
  out.outcome = cover.outcome;
  if (cover.outcome == Outcome::Found) {
    for (int idx : cover.solutions.front()) out.classes.push_back(sets.sets[idx]);
    std::sort(out.classes.begin(), out.classes.end());
  }
  out.nodes = ctx.nodes() - start;
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Certificate validation, independent of the searches.

// True iff every class is a set of points meeting every line exactly once
// and the classes partition the points.
inline bool is_transversal_partition(const IncidenceStructure& s, const std::vector<std::vector<int>>& classes) {
  std::vector<int> owner(s.point_count(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int p : classes[c]) {
      if (p < 0 || p >= s.point_count() || owner[p] >= 0) return false;
      owner[p] = static_cast<int>(c);
    }
  if (std::count(owner.begin(), owner.end(), -1) != 0) return false;
  for (const auto& line : s.lines()) {
    std::vector<int> hits(classes.size(), 0);
    for (int p : line) ++hits[owner[p]];
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) return false;
  }
  return true;
}

inline bool validate_resolution(const Design& d, const Resolution& r) {
  std::vector<int> used(d.blocks.size(), 0);
  for (const auto& cls : r.classes) {
    std::vector<int> seen(d.v, 0);
    for (int b : cls) {
      if (b < 0 || b >= static_cast<int>(d.blocks.size()) || used[b]++) return false;
      for (int p : d.blocks[b])
        if (seen[p]++) return false;
    }
    if (std::count(seen.begin(), seen.end(), 1) != d.v) return false;
  }
  return std::all_of(used.begin(), used.end(), [](int u) { return u == 1; });
}

inline bool validate_extension(const OrthogonalArray& a, const OaExtensionRow& row) {
  if (static_cast<int>(row.row.size()) != a.n * a.n) return false;
  auto columns = a.columns;
  for (int c = 0; c < a.n * a.n; ++c) columns[c].push_back(row.row[c]);
  try {
    validate_oa(a.k + 1, a.n, std::move(columns));
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

inline bool validate_ovoid_partition(const IncidenceStructure& s, const PgParams& p, const OvoidPartition& o) {
  const int ovoid_size = p.s * p.t + 1;
  for (const auto& ov : o.ovoids)
    if (static_cast<int>(ov.size()) != ovoid_size) return false;
  return is_transversal_partition(s, o.ovoids);
}

// ---------------------------------------------------------------------------
// Conversions between certificates and colourings of the point graph.

inline VertexMap partition_to_coloring(int point_count, const std::vector<std::vector<int>>& classes) {
  VertexMap colors{classes.size(), std::vector<int>(point_count, -1)};
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int p : classes[c]) colors.image[p] = static_cast<int>(c);
  return colors;
}

// Colour classes of a colouring, each sorted; empty classes are dropped.
inline std::vector<std::vector<int>> coloring_to_partition(const VertexMap& colors) {
  std::vector<std::vector<int>> classes(colors.target_size);
  for (std::size_t v = 0; v < colors.source_size(); ++v) classes[colors(v)].push_back(static_cast<int>(v));
  std::erase_if(classes, [](const std::vector<int>& c) { return c.empty(); });
  std::sort(classes.begin(), classes.end());
  return classes;
}

// Geometry point classes -> parallel classes (geometry points are blocks).
inline Resolution to_resolution(const std::vector<std::vector<int>>& classes) { return Resolution{classes}; }

inline OaExtensionRow to_extension_row(int columns, const std::vector<std::vector<int>>& classes) {
  OaExtensionRow row{std::vector<int>(columns, -1)};
  for (std::size_t sym = 0; sym < classes.size(); ++sym)
    for (int c : classes[sym]) row.row[c] = static_cast<int>(sym);
  return row;
}

inline std::vector<std::vector<int>> extension_row_classes(const OaExtensionRow& row, int n) {
  std::vector<std::vector<int>> classes(n);
  for (std::size_t c = 0; c < row.row.size(); ++c) classes[row.row[c]].push_back(static_cast<int>(c));
  return classes;
}

// ---------------------------------------------------------------------------
// Searches.

inline CertificateSearch<Resolution> find_resolution(const Design& d, const SearchBudget& budget = {}) {
  CertificateSearch<Resolution> out;
  if (d.v % d.k != 0) {
    out.note = "v is not divisible by k";
    return out;
  }
  SearchContext ctx(budget);
  const Geometry geo = design_to_geometry(d);
  auto res = detail::transversal_partition(geo.structure, ctx, kDefaultTransversalLimit);
  out.outcome = res.outcome;
  out.candidates = res.candidates;
  out.nodes = res.nodes;
  if (res.limit_hit) out.note = "parallel class enumeration hit its cap";
  if (res.outcome == Outcome::Found) out.certificate = to_resolution(res.classes);
  return out;
}

inline CertificateSearch<OaExtensionRow> extend_oa(const OrthogonalArray& a, const SearchBudget& budget = {}) {
  CertificateSearch<OaExtensionRow> out;
  if (a.k >= a.n + 1) {
    out.note = "OA(n+1, n) cannot be extended";
    return out;
  }
  SearchContext ctx(budget);
  const Geometry geo = oa_to_geometry(a);
  auto res = detail::transversal_partition(geo.structure, ctx, kDefaultTransversalLimit);
  out.outcome = res.outcome;
  out.candidates = res.candidates;
  out.nodes = res.nodes;
  if (res.limit_hit) out.note = "transversal enumeration hit its cap";
  if (res.outcome == Outcome::Found) out.certificate = to_extension_row(a.n * a.n, res.classes);
  return out;
}

struct OvoidSearch : CertificateSearch<OvoidPartition> {
  Decision ovoids_exist = Decision::Unknown;
};

inline OvoidSearch find_ovoid_partition(const IncidenceStructure& s, const SearchBudget& budget = {}) {
  PgParams params;
  try {
    params = validate_geometry(s);
  } catch (const ValidationError& e) {
    throw PreconditionError(std::string("find_ovoid_partition: not a generalized quadrangle (") + e.what() + ")");
  }
  if (!params.is_quadrangle()) throw PreconditionError("find_ovoid_partition: alpha must be 1");
  OvoidSearch out;
  SearchContext ctx(budget);
  auto res = detail::transversal_partition(s, ctx, kDefaultTransversalLimit);
  out.outcome = res.outcome;
  out.candidates = res.candidates;
  out.nodes = res.nodes;
  if (res.limit_hit) {
    out.note = "ovoid enumeration hit its cap";
  } else if (res.outcome != Outcome::Exhausted || res.candidates > 0) {
    out.ovoids_exist = res.candidates > 0 ? Decision::Yes : Decision::No;
  }
  if (res.candidates > 0 && res.outcome != Outcome::Exhausted) out.ovoids_exist = Decision::Yes;
  if (res.outcome == Outcome::Found) out.certificate = OvoidPartition{res.classes};
  return out;
}

// ---------------------------------------------------------------------------
// Cross-validation: complete core <=> certificate.

struct CrossCheck {
  CoreReport core;
  // Outcome of the proper (s+1)-colouring search, the side the equivalence
  // is about; also known when coreness itself ran out of budget.
  Outcome colorable = Outcome::Exhausted;
  std::string certificate_kind;
  Outcome certificate = Outcome::Exhausted;
  std::vector<std::vector<int>> certificate_classes;
  std::optional<Resolution> resolution;
  std::optional<OaExtensionRow> extension;
  std::optional<OvoidPartition> ovoids;
  Decision ovoids_exist = Decision::Unknown;
  std::size_t candidates = 0;
  bool complete_point_graph = false;
  // Certificate -> colouring and colouring -> certificate both re-validate.
  bool conversions_valid = true;
  Decision consistent = Decision::Unknown;
  std::string note;
};

inline CrossCheck cross_check(const Geometry& geo, const SearchBudget& budget = {}) {
  CrossCheck out;
  const PointGraph pg = point_graph(geo.structure);
  const Graph& x = pg.graph;
  out.core = classify_core(x, budget);
  switch (geo.family) {
    case Family::Design: out.certificate_kind = "resolution"; break;
    case Family::OrthogonalArray: out.certificate_kind = "oa-extension"; break;
    case Family::Quadrangle: out.certificate_kind = "ovoid-partition"; break;
    case Family::Generic: out.certificate_kind = "line-transversal-partition"; break;
  }
  if (is_complete(x)) {
    out.complete_point_graph = true;
    out.colorable = Outcome::Found;
    out.certificate_kind = "none";
    out.certificate = Outcome::None;
    out.consistent = Decision::Yes;
    out.note = "point graph is complete, hence its own core";
    return out;
  }

  if (out.core.verdict == CoreVerdict::CompleteCore)
    out.colorable = Outcome::Found;
  else if (out.core.verdict == CoreVerdict::Core || out.core.verdict == CoreVerdict::Other ||
           out.core.reason == "coreness" || out.core.reason.starts_with("core of retract"))
    out.colorable = Outcome::None;
  else
    out.colorable = Outcome::Exhausted;

  switch (geo.family) {
    case Family::Design: {
      auto r = find_resolution(*geo.design, budget);
      out.certificate = r.outcome;
      out.candidates = r.candidates;
      out.note = r.note;
      if (r.certificate) {
        out.resolution = r.certificate;
        out.certificate_classes = r.certificate->classes;
        if (!validate_resolution(*geo.design, *r.certificate)) out.conversions_valid = false;
      }
      break;
    }
    case Family::OrthogonalArray: {
      auto r = extend_oa(*geo.oa, budget);
      out.certificate = r.outcome;
      out.candidates = r.candidates;
      out.note = r.note;
      if (r.certificate) {
        out.extension = r.certificate;
        out.certificate_classes = extension_row_classes(*r.certificate, geo.oa->n);
        if (!validate_extension(*geo.oa, *r.certificate)) out.conversions_valid = false;
      }
      break;
    }
    case Family::Quadrangle: {
      auto r = find_ovoid_partition(geo.structure, budget);
      out.certificate = r.outcome;
      out.candidates = r.candidates;
      out.ovoids_exist = r.ovoids_exist;
      out.note = r.note;
      if (r.certificate) {
        out.ovoids = r.certificate;
        out.certificate_classes = r.certificate->ovoids;
        if (!validate_ovoid_partition(geo.structure, geo.params, *r.certificate)) out.conversions_valid = false;
      }
      break;
    }
    case Family::Generic: {
      SearchContext ctx(budget);
      auto r = detail::transversal_partition(geo.structure, ctx, kDefaultTransversalLimit);
      out.certificate = r.outcome;
      out.candidates = r.candidates;
      out.certificate_classes = r.classes;
      break;
    }
  }

  // Certificate -> proper colouring with s+1 colours.
  if (out.certificate == Outcome::Found) {
    const auto colors = partition_to_coloring(geo.structure.point_count(), out.certificate_classes);
    if (!is_proper_coloring(x, colors, static_cast<std::size_t>(geo.params.s + 1)) ||
        !is_transversal_partition(geo.structure, out.certificate_classes))
      out.conversions_valid = false;
  }
  // Colouring -> certificate.
  if (out.core.verdict == CoreVerdict::CompleteCore && out.core.coloring) {
    const auto classes = coloring_to_partition(*out.core.coloring);
    if (!is_transversal_partition(geo.structure, classes)) out.conversions_valid = false;
    if (geo.family == Family::Design && !validate_resolution(*geo.design, to_resolution(classes)))
      out.conversions_valid = false;
    if (geo.family == Family::OrthogonalArray &&
        !validate_extension(*geo.oa, to_extension_row(geo.oa->n * geo.oa->n, classes)))
      out.conversions_valid = false;
  }

  if (out.colorable == Outcome::Exhausted || out.certificate == Outcome::Exhausted)
    out.consistent = Decision::Unknown;
  else
    out.consistent = ((out.colorable == Outcome::Found) == (out.certificate == Outcome::Found) && out.conversions_valid)
                         ? Decision::Yes
                         : Decision::No;
  return out;
}

}  // namespace geomcore
