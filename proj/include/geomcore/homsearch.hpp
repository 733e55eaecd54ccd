#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "geomcore/bitset.hpp"
#include "geomcore/builders.hpp"
#include "geomcore/cliques.hpp"
#include "geomcore/error.hpp"
#include "geomcore/geometry.hpp"
#include "geomcore/graph.hpp"
#include "geomcore/hom_engine.hpp"
#include "geomcore/search_context.hpp"
#include "geomcore/vertex_map.hpp"

namespace geomcore {

enum class Decision { Yes, No, Unknown };

inline const char* decision_name(Decision d) {
  switch (d) {
    case Decision::Yes: return "yes";
    case Decision::No: return "no";
    case Decision::Unknown: return "unknown";
  }
  return "unknown";
}

struct HomResult {
  Outcome outcome = Outcome::None;
  std::optional<VertexMap> witness;
  std::uint64_t nodes = 0;
  bool found() const { return outcome == Outcome::Found; }
};

// Enumeration result; `complete` is false when the budget ran out, in which
// case `maps` holds only what was found.
struct MapList {
  bool complete = true;
  std::vector<VertexMap> maps;
  std::uint64_t nodes = 0;
};

namespace detail {

// Maximum cliques of the source, used for the injectivity (pigeonhole) checks.
inline std::vector<std::vector<int>> source_cliques(const Graph& x) {
  if (x.order() == 0) return {};
  try {
    auto cliques = max_cliques(x, 20'000);
    if (!cliques.empty() && cliques.front().size() < 3) return {};
    return cliques;
  } catch (const LimitExceeded&) {
    return {};
  }
}

// For every target vertex, the size of the largest target clique through it.
inline std::vector<int> clique_reach(const Graph& y) {
  std::vector<int> reach(y.order(), 1);
  for (std::size_t t = 0; t < y.order(); ++t) {
    const auto nbrs = y.neighbors(t).to_vector();
    reach[t] = 1 + (nbrs.empty() ? 0 : clique_number(induced(y, std::span<const int>(nbrs))));
  }
  return reach;
}

inline HomProblem make_problem(const Graph& x, const Graph& y, const std::vector<std::vector<int>>& cliques) {
  HomProblem p;
  p.source = &x;
  p.target = &y;
  p.domains.assign(x.order(), Bitset::full(y.order()));
  p.cliques = cliques;
  // A vertex in a c-clique must land on a vertex that lies in a c-clique.
  if (!cliques.empty() && !is_complete(y) && y.order() <= 512) {
    std::vector<int> need(x.order(), 1);
    for (const auto& c : cliques)
      for (int u : c) need[u] = std::max(need[u], static_cast<int>(c.size()));
    const auto reach = clique_reach(y);
    for (std::size_t u = 0; u < x.order(); ++u)
      for (std::size_t t = 0; t < y.order(); ++t)
        if (reach[t] < need[u]) p.domains[u].reset(t);
  }
  return p;
}

inline HomProblem make_iso_problem(const Graph& x, const Graph& y) {
  HomProblem p;
  p.source = &x;
  p.target = &y;
  p.injective = true;
  p.induced = true;
  p.domains.assign(x.order(), Bitset(y.order()));
  for (std::size_t u = 0; u < x.order(); ++u)
    for (std::size_t t = 0; t < y.order(); ++t)
      if (x.degree(u) == y.degree(t)) p.domains[u].set(t);
  return p;
}

inline VertexMap to_map(std::vector<int> image, std::size_t target_size) { return VertexMap{target_size, std::move(image)}; }

inline HomResult first_solution(const HomProblem& p, SearchContext& ctx) {
  const auto before = ctx.nodes();
  auto out = run_hom_search(p, ctx, false);
  HomResult r;
  r.outcome = out.outcome;
  r.nodes = ctx.nodes() - before;
  if (out.outcome == Outcome::Found) r.witness = to_map(std::move(out.solutions.front()), p.target->order());
  return r;
}

inline MapList all_solutions(const HomProblem& p, SearchContext& ctx) {
  const auto before = ctx.nodes();
  auto out = run_hom_search(p, ctx, true);
  MapList r;
  r.complete = out.outcome != Outcome::Exhausted;
  r.nodes = ctx.nodes() - before;
  for (auto& s : out.solutions) r.maps.push_back(to_map(std::move(s), p.target->order()));
  std::sort(r.maps.begin(), r.maps.end());
  return r;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace detail

// Orbits of the automorphisms that fix every vertex of `fixed`; orbit[v] is
// the lowest vertex of v's orbit. Built from generators found by targeted
// searches (map an orbit representative onto a candidate vertex).
struct OrbitPartition {
  bool complete = true;
  std::vector<int> orbit;
  std::vector<VertexMap> generators;

  std::vector<int> representatives() const {
    std::vector<int> reps;
    for (std::size_t v = 0; v < orbit.size(); ++v)
      if (orbit[v] == static_cast<int>(v)) reps.push_back(static_cast<int>(v));
    return reps;
  }
};

namespace detail {

inline OrbitPartition automorphism_orbits(const Graph& x, const std::vector<int>& fixed, SearchContext& ctx) {
  const std::size_t n = x.order();
  OrbitPartition out;
  UnionFind uf(n);
  Bitset is_fixed(n);
  for (int f : fixed) is_fixed.set(f);
  std::vector<int> reps;
  for (std::size_t b = 0; b < n && out.complete; ++b) {
    if (is_fixed.test(b)) continue;
    bool merged = std::any_of(reps.begin(), reps.end(), [&](int r) { return uf.find(r) == uf.find(b); });
    for (std::size_t i = 0; i < reps.size() && !merged; ++i) {
      const int r = reps[i];
      if (x.degree(r) != x.degree(b)) continue;
      HomProblem p = make_iso_problem(x, x);
      for (int f : fixed) p.domains[f] = Bitset(n, {static_cast<std::size_t>(f)});
      p.domains[r] = Bitset(n, {b});
      auto res = first_solution(p, ctx);
      if (res.outcome == Outcome::Exhausted) {
        out.complete = false;
        break;
      }
      if (res.found()) {
        for (std::size_t v = 0; v < n; ++v) uf.unite(v, static_cast<std::size_t>((*res.witness)(v)));
        out.generators.push_back(std::move(*res.witness));
        merged = true;
      }
    }
    if (!merged) reps.push_back(static_cast<int>(b));
  }
  out.orbit.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.orbit[v] = static_cast<int>(uf.find(v));
  return out;
}

}  // namespace detail

inline OrbitPartition vertex_orbits(const Graph& x, const SearchBudget& budget = {}) {
  SearchContext ctx(budget);
  return detail::automorphism_orbits(x, {}, ctx);
}

inline Decision is_vertex_transitive(const Graph& x, const SearchBudget& budget = {}) {
  auto orbits = vertex_orbits(x, budget);
  if (!orbits.complete) return Decision::Unknown;
  return orbits.representatives().size() <= 1 ? Decision::Yes : Decision::No;
}

// ---------------------------------------------------------------------------
// Homomorphisms and colourings.

namespace detail {

inline HomResult find_homomorphism(const Graph& x, const Graph& y, SearchContext& ctx) {
  if (x.order() == 0 || y.order() == 0) throw PreconditionError("find_homomorphism: graphs must be nonempty");
  const auto cliques = source_cliques(x);
  return first_solution(make_problem(x, y, cliques), ctx);
}

inline HomResult k_colorable(const Graph& x, int q, SearchContext& ctx) {
  if (q < 1) throw PreconditionError("k_colorable: q must be at least 1");
  HomResult r;
  if (x.order() == 0) {
    r.outcome = Outcome::Found;
    r.witness = VertexMap{static_cast<std::size_t>(q), {}};
    return r;
  }
  const auto clique = maximum_clique(x);
  if (static_cast<int>(clique.size()) > q) return r;
  const Graph kq = complete_graph(static_cast<std::size_t>(q));
  HomProblem p;
  p.source = &x;
  p.target = &kq;
  p.domains.assign(x.order(), Bitset::full(kq.order()));
  // Colour symmetry: the first maximum clique gets colours 0, 1, 2, ...
  for (std::size_t i = 0; i < clique.size(); ++i) p.domains[clique[i]] = Bitset(kq.order(), {i});
  p.cliques = source_cliques(x);
  return first_solution(p, ctx);
}

}  // namespace detail

inline HomResult find_homomorphism(const Graph& x, const Graph& y, const SearchBudget& budget = {}) {
  SearchContext ctx(budget);
  return detail::find_homomorphism(x, y, ctx);
}

inline HomResult k_colorable(const Graph& x, int q, const SearchBudget& budget = {}) {
  SearchContext ctx(budget);
  return detail::k_colorable(x, q, ctx);
}

// ---------------------------------------------------------------------------
// Endomorphisms, automorphisms, isomorphisms.

inline MapList enumerate_endomorphisms(const Graph& x, const SearchBudget& budget = {}) {
  SearchContext ctx(budget);
  const auto cliques = detail::source_cliques(x);
  return detail::all_solutions(detail::make_problem(x, x, cliques), ctx);
}

inline MapList automorphisms(const Graph& x, const SearchBudget& budget = {}) {
  SearchContext ctx(budget);
  return detail::all_solutions(detail::make_iso_problem(x, x), ctx);
}

namespace detail {
inline HomResult isomorphic(const Graph& x, const Graph& y, SearchContext& ctx) {
  HomResult r;
  if (x.order() != y.order() || x.edge_count() != y.edge_count()) return r;
  std::vector<std::size_t> dx, dy;
  for (std::size_t v = 0; v < x.order(); ++v) dx.push_back(x.degree(v)), dy.push_back(y.degree(v));
  std::sort(dx.begin(), dx.end());
  std::sort(dy.begin(), dy.end());
  if (dx != dy) return r;
  if (x.order() == 0) {
    r.outcome = Outcome::Found;
    r.witness = VertexMap{0, {}};
    return r;
  }
  return first_solution(make_iso_problem(x, y), ctx);
}
}  // namespace detail

inline HomResult isomorphic(const Graph& x, const Graph& y, const SearchBudget& budget = {}) {
  SearchContext ctx(budget);
  return detail::isomorphic(x, y, ctx);
}

// Single orbit of the automorphism group on ordered pairs at distance two.
inline Decision is_distance_two_transitive(const Graph& x, const SearchBudget& budget = {}) {
  detail::require_connected(x, "is_distance_two_transitive");
  SearchContext ctx(budget);
  const std::size_t n = x.order();
  const auto dist = distance_matrix(x);
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> index(n * n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (dist[a][b] == 2) {
        index[a * n + b] = static_cast<int>(pairs.size());
        pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
  if (pairs.empty()) return Decision::Yes;
  detail::UnionFind uf(pairs.size());
  const auto [a, b] = pairs.front();
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    if (uf.find(i) == uf.find(0)) continue;
    auto p = detail::make_iso_problem(x, x);
    p.domains[a] = Bitset(n, {static_cast<std::size_t>(pairs[i].first)});
    p.domains[b] = Bitset(n, {static_cast<std::size_t>(pairs[i].second)});
    auto res = detail::first_solution(p, ctx);
    if (res.outcome == Outcome::Exhausted) return Decision::Unknown;
    if (!res.found()) return Decision::No;
    const VertexMap& g = *res.witness;
    for (std::size_t j = 0; j < pairs.size(); ++j)
      uf.unite(j, static_cast<std::size_t>(index[g(pairs[j].first) * n + g(pairs[j].second)]));
  }
  return Decision::Yes;
}

// ---------------------------------------------------------------------------
// Cores.

struct CoreTest {
  Decision core = Decision::Unknown;
  std::optional<VertexMap> proper_endomorphism;
  // Vertex-deleted targets X - v proven to admit no homomorphism from X.
  std::vector<int> targets_refuted;
  bool vertex_transitive = false;
  std::uint64_t nodes = 0;
};

namespace detail {

// X is a core iff no X - v receives a homomorphism from X. X - v and
// X - g(v) are isomorphic for automorphisms g, so one v per vertex orbit
// suffices. Automorphisms fixing v act on the solutions, so the image of v
// itself may be restricted to one representative per orbit of that
// stabilizer.
inline CoreTest is_core(const Graph& x, SearchContext& ctx) {
  require_connected(x, "is_core");
  CoreTest out;
  const auto start = ctx.nodes();
  const std::size_t n = x.order();
  if (n <= 1 || is_complete(x)) {
    out.core = Decision::Yes;
    out.vertex_transitive = true;
    return out;
  }
  const auto orbits = automorphism_orbits(x, {}, ctx);
  std::vector<int> deleted;
  if (orbits.complete) {
    deleted = orbits.representatives();
    out.vertex_transitive = deleted.size() == 1;
  } else {
    deleted.resize(n);
    std::iota(deleted.begin(), deleted.end(), 0);
  }
  const auto cliques = source_cliques(x);
  for (int v : deleted) {
    HomProblem p = make_problem(x, x, cliques);
    for (auto& d : p.domains) d.reset(static_cast<std::size_t>(v));
    auto stab = automorphism_orbits(x, {v}, ctx);
    if (stab.complete) {
      Bitset reps(n);
      for (int r : stab.representatives()) reps.set(static_cast<std::size_t>(r));
      p.domains[v] &= reps;
    }
    auto res = first_solution(p, ctx);
    if (res.outcome == Outcome::Exhausted) {
      out.core = Decision::Unknown;
      out.nodes = ctx.nodes() - start;
      return out;
    }
    if (res.found()) {
      out.core = Decision::No;
      out.proper_endomorphism = std::move(res.witness);
      out.nodes = ctx.nodes() - start;
      return out;
    }
    out.targets_refuted.push_back(v);
  }
  out.core = Decision::Yes;
  out.nodes = ctx.nodes() - start;
  return out;
}

}  // namespace detail

inline CoreTest is_core(const Graph& x, const SearchBudget& budget = {}) {
  SearchContext ctx(budget);
  return detail::is_core(x, ctx);
}

enum class CoreVerdict { Core, CompleteCore, Other, Unknown };

inline const char* verdict_name(CoreVerdict v) {
  switch (v) {
    case CoreVerdict::Core: return "Core";
    case CoreVerdict::CompleteCore: return "CompleteCore";
    case CoreVerdict::Other: return "Other";
    case CoreVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

struct CoreReport {
  CoreVerdict verdict = CoreVerdict::Unknown;
  int q = 0;           // CompleteCore: clique number = chromatic number
  int core_order = 0;  // order of the core (Core: |V|, CompleteCore: q)
  std::string reason;  // Unknown: stage that ran out of budget
  int clique_number = 0;
  std::vector<int> clique;
  std::optional<VertexMap> coloring;
  std::optional<VertexMap> proper_endomorphism;
  std::vector<int> targets_refuted;
  int recursion_depth = 0;
  std::uint64_t nodes = 0;
};

namespace detail {

inline constexpr int kMaxCoreRecursion = 8;

inline CoreReport classify_core(const Graph& x, SearchContext& ctx, int depth) {
  require_connected(x, "classify_core");
  if (x.order() == 0) throw PreconditionError("classify_core: empty graph");
  const auto start = ctx.nodes();
  CoreReport r;
  r.recursion_depth = depth;
  auto finish = [&]() -> CoreReport& {
    r.nodes = ctx.nodes() - start;
    return r;
  };
  r.clique = maximum_clique(x);
  r.clique_number = static_cast<int>(r.clique.size());
  if (is_complete(x)) {
    r.verdict = CoreVerdict::CompleteCore;
    r.q = r.core_order = static_cast<int>(x.order());
    r.coloring = identity_map(x.order());
    return finish();
  }
  auto colouring = k_colorable(x, r.clique_number, ctx);
  if (colouring.outcome == Outcome::Exhausted) {
    r.reason = "colouring";
    return finish();
  }
  if (colouring.found()) {
    r.verdict = CoreVerdict::CompleteCore;
    r.q = r.core_order = r.clique_number;
    r.coloring = std::move(colouring.witness);
    return finish();
  }
  auto core = is_core(x, ctx);
  r.targets_refuted = core.targets_refuted;
  if (core.core == Decision::Unknown) {
    r.reason = "coreness";
    return finish();
  }
  if (core.core == Decision::Yes) {
    r.verdict = CoreVerdict::Core;
    r.core_order = static_cast<int>(x.order());
    return finish();
  }
  r.proper_endomorphism = core.proper_endomorphism;
  if (depth >= kMaxCoreRecursion) {
    r.reason = "recursion depth";
    return finish();
  }
  const Graph image = induced(x, r.proper_endomorphism->image_set());
  const CoreReport inner = classify_core(image, ctx, depth + 1);
  if (inner.verdict == CoreVerdict::Unknown) {
    r.reason = "core of retract: " + inner.reason;
    return finish();
  }
  r.verdict = CoreVerdict::Other;
  r.core_order = inner.core_order;
  return finish();
}

}  // namespace detail

// Core / complete core / other, with witnesses. A complete core K_q is
// certified by a q-clique and a proper q-colouring.
inline CoreReport classify_core(const Graph& x, const SearchBudget& budget = {}) {
  SearchContext ctx(budget);
  return detail::classify_core(x, ctx, 0);
}

// ---------------------------------------------------------------------------
// Local structure.

struct LocalStructure {
  enum class Kind { Grid, GQPointGraph, Other };
  Kind kind = Kind::Other;
  int a = 0;  // Grid: p; GQPointGraph: s
  int b = 0;  // Grid: q; GQPointGraph: t
};

inline LocalStructure local_structure(const Graph& x, std::size_t v, const SearchBudget& budget = {}) {
  if (v >= x.order()) throw PreconditionError("local_structure: vertex out of range");
  const Graph h = induced(x, x.neighbors(v));
  LocalStructure out;
  const std::size_t m = h.order();
  const auto deg = regular_degree(h);
  if (m == 0 || !deg) return out;
  // Grid K_p x K_q: pq vertices of valency p + q - 2.
  const long long sum = *deg + 2;
  const long long disc = sum * sum - 4 * static_cast<long long>(m);
  if (disc >= 0) {
    const auto root = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(disc))));
    if (root * root == disc && (sum - root) % 2 == 0) {
      const int p = static_cast<int>((sum - root) / 2);
      const int q = static_cast<int>((sum + root) / 2);
      if (p >= 2 && isomorphic(h, grid(p, q), budget).found()) {
        out.kind = LocalStructure::Kind::Grid;
        out.a = p;
        out.b = q;
        return out;
      }
    }
  }
  // GQ(s,t) point graph: SRG((s+1)(st+1), s(t+1), s-1, t+1) whose maximum
  // cliques are the lines of a generalized quadrangle.
  if (auto srg = srg_check(h)) {
    const int s = srg->lambda + 1;
    const int t = srg->mu - 1;
    if (s >= 1 && t >= 1 && srg->n == (s + 1) * (s * t + 1) && srg->k == s * (t + 1)) {
      try {
        auto cliques = max_cliques(h);
        if (static_cast<int>(cliques.front().size()) == s + 1 &&
            validate_geometry(IncidenceStructure(static_cast<int>(m), cliques)) == PgParams{s, t, 1}) {
          out.kind = LocalStructure::Kind::GQPointGraph;
          out.a = s;
          out.b = t;
        }
      } catch (const Error&) {
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Geometry-level checks.

struct ImageTheoremResult {
  enum class Kind { HypothesisFailed, Consistent, CounterexampleFound, Unknown };
  Kind kind = Kind::Unknown;
  std::string reason;
  std::optional<VertexMap> witness;
  std::uint64_t nodes = 0;
};

inline const char* image_kind_name(ImageTheoremResult::Kind k) {
  switch (k) {
    case ImageTheoremResult::Kind::HypothesisFailed: return "HypothesisFailed";
    case ImageTheoremResult::Kind::Consistent: return "Consistent";
    case ImageTheoremResult::Kind::CounterexampleFound: return "CounterexampleFound";
    case ImageTheoremResult::Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

// Under either hypothesis (alpha > (t+1)/2 with every (s+1)-clique a line, or
// alpha = 1; s, t > 1 in both), every proper endomorphism of the point graph
// has a single line as its image. Searches for a proper endomorphism whose
// image is not a clique.
inline ImageTheoremResult verify_endomorphism_image_theorem(const Geometry& geo, const SearchBudget& budget = {}) {
  ImageTheoremResult out;
  const PgParams& p = geo.params;
  const PointGraph pg = point_graph(geo.structure);
  const Graph& x = pg.graph;
  if (p.s < 2 || p.t < 2) {
    out.kind = ImageTheoremResult::Kind::HypothesisFailed;
    out.reason = "requires s, t > 1";
    return out;
  }
  if (p.alpha != 1) {
    if (2 * p.alpha <= p.t + 1) {
      out.kind = ImageTheoremResult::Kind::HypothesisFailed;
      out.reason = "requires alpha > (t+1)/2 or alpha = 1";
      return out;
    }
    if (is_complete(x)) {
      out.kind = ImageTheoremResult::Kind::HypothesisFailed;
      out.reason = "point graph is complete";
      return out;
    }
    const auto cliques = classify_cliques(geo);
    if (!cliques.non_line_cliques.empty() || cliques.max_size != p.s + 1) {
      out.kind = ImageTheoremResult::Kind::HypothesisFailed;
      out.reason = "point graph has " + std::to_string(cliques.non_line_cliques.size()) + " non-line " +
                   std::to_string(cliques.max_size) + "-cliques";
      return out;
    }
  }

  SearchContext ctx(budget);
  auto core = detail::is_core(x, ctx);
  if (core.core == Decision::Yes) {
    out.kind = ImageTheoremResult::Kind::Consistent;
    out.reason = "no proper endomorphisms";
    out.nodes = ctx.nodes();
    return out;
  }
  if (core.core == Decision::Unknown) {
    out.kind = ImageTheoremResult::Kind::Unknown;
    out.reason = "coreness search exhausted the budget";
    out.nodes = ctx.nodes();
    return out;
  }
  // Proper endomorphisms exist; look for one whose image is not a clique.
  const auto orbits = detail::automorphism_orbits(x, {}, ctx);
  std::vector<int> deleted;
  if (orbits.complete) {
    deleted = orbits.representatives();
  } else {
    deleted.resize(x.order());
    std::iota(deleted.begin(), deleted.end(), 0);
  }
  const auto cliques = detail::source_cliques(x);
  for (int v : deleted) {
    auto problem = detail::make_problem(x, x, cliques);
    for (auto& d : problem.domains) d.reset(static_cast<std::size_t>(v));
    problem.accept = [&x](const std::vector<int>& image) {
      std::vector<int> distinct = image;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (std::size_t i = 0; i < distinct.size(); ++i)
        for (std::size_t j = i + 1; j < distinct.size(); ++j)
          if (!x.adjacent(distinct[i], distinct[j])) return true;
      return false;
    };
    auto res = detail::first_solution(problem, ctx);
    if (res.outcome == Outcome::Exhausted) {
      out.kind = ImageTheoremResult::Kind::Unknown;
      out.reason = "endomorphism search exhausted the budget";
      out.nodes = ctx.nodes();
      return out;
    }
    if (res.found()) {
      out.kind = ImageTheoremResult::Kind::CounterexampleFound;
      out.witness = std::move(res.witness);
      out.nodes = ctx.nodes();
      return out;
    }
  }
  out.kind = ImageTheoremResult::Kind::Consistent;
  out.reason = "every proper endomorphism has a clique image";
  out.nodes = ctx.nodes();
  return out;
}

struct DivisorResult {
  enum class Kind { NotApplicable, Holds, Violated, Unknown };
  Kind kind = Kind::Unknown;
  int core_order = 0;
  int order = 0;
  CoreReport report;
};

inline const char* divisor_kind_name(DivisorResult::Kind k) {
  switch (k) {
    case DivisorResult::Kind::NotApplicable: return "NotApplicable";
    case DivisorResult::Kind::Holds: return "Holds";
    case DivisorResult::Kind::Violated: return "Violated";
    case DivisorResult::Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

// For vertex-transitive graphs the core order divides the graph order.
inline DivisorResult core_order_divides(const Graph& x, const SearchBudget& budget = {}) {
  DivisorResult out;
  out.order = static_cast<int>(x.order());
  SearchContext ctx(budget);
  const auto orbits = detail::automorphism_orbits(x, {}, ctx);
  if (!orbits.complete) return out;
  if (orbits.representatives().size() != 1) {
    out.kind = DivisorResult::Kind::NotApplicable;
    return out;
  }
  out.report = detail::classify_core(x, ctx, 0);
  if (out.report.verdict == CoreVerdict::Unknown) return out;
  out.core_order = out.report.core_order;
  out.kind = out.order % out.core_order == 0 ? DivisorResult::Kind::Holds : DivisorResult::Kind::Violated;
  return out;
}

}  // namespace geomcore
