#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "geomcore/bitset.hpp"
#include "geomcore/error.hpp"
#include "geomcore/geometry.hpp"
#include "geomcore/graph.hpp"

namespace geomcore {

inline constexpr std::size_t kDefaultCliqueLimit = 1'000'000;

namespace detail {

// Branch-and-bound over bitset candidate sets. Each node greedily colours the
// candidates; the colour count bounds the clique size reachable from it.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  // Largest clique (lowest-index branching order, so deterministic).
  std::vector<int> maximum() {
    best_.clear();
    mode_ = Mode::Maximum;
    target_ = 0;
    std::vector<int> current;
    expand(current, Bitset::full(g_.order()));
    return best_;
  }

  // Every clique of exactly `size` vertices that is maximal in size, i.e.
  // all maximum cliques once `size` is the clique number.
  std::vector<std::vector<int>> all_of_size(std::size_t size, std::size_t limit) {
    mode_ = Mode::Enumerate;
    target_ = size;
    limit_ = limit;
    found_.clear();
    std::vector<int> current;
    expand(current, Bitset::full(g_.order()));
    for (auto& c : found_) std::sort(c.begin(), c.end());
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  enum class Mode { Maximum, Enumerate };

  void colour_sort(const Bitset& candidates, std::vector<int>& order, std::vector<int>& bound) const {
    order.clear();
    bound.clear();
    Bitset uncoloured = candidates;
    int colour = 0;
    while (uncoloured.any()) {
      ++colour;
      Bitset available = uncoloured;
      for (std::size_t v = available.find_first(); v < available.size(); v = available.find_next(v + 1)) {
        available.subtract(g_.neighbors(v));
        uncoloured.reset(v);
        order.push_back(static_cast<int>(v));
        bound.push_back(colour);
      }
    }
  }

  void expand(std::vector<int>& current, Bitset candidates) {
    if (candidates.none()) {
      if (mode_ == Mode::Maximum) {
        if (current.size() > best_.size()) best_ = current;
      } else if (current.size() == target_) {
        if (found_.size() >= limit_) throw LimitExceeded("max_cliques: too many maximum cliques", limit_);
        found_.push_back(current);
      }
      return;
    }
    std::vector<int> order;
    std::vector<int> bound;
    colour_sort(candidates, order, bound);
    // Visit candidates in reverse colour order; lower-index vertices are kept
    // for the deeper, wider branches.
    for (std::size_t i = order.size(); i-- > 0;) {
      const std::size_t reach = current.size() + static_cast<std::size_t>(bound[i]);
      if (mode_ == Mode::Maximum ? reach <= best_.size() : reach < target_) return;
      const int v = order[i];
      current.push_back(v);
      expand(current, candidates & g_.neighbors(v));
      current.pop_back();
      candidates.reset(v);
    }
  }

  const Graph& g_;
  Mode mode_ = Mode::Maximum;
  std::vector<int> best_;
  std::size_t target_ = 0;
  std::size_t limit_ = kDefaultCliqueLimit;
  std::vector<std::vector<int>> found_;
};

}  // namespace detail

inline std::vector<int> maximum_clique(const Graph& g) {
  auto c = detail::CliqueSearch(g).maximum();
  std::sort(c.begin(), c.end());
  return c;
}

inline int clique_number(const Graph& g) { return static_cast<int>(maximum_clique(g).size()); }

// All maximum cliques, each sorted, the list sorted lexicographically.
inline std::vector<std::vector<int>> max_cliques(const Graph& g, std::size_t limit = kDefaultCliqueLimit) {
  if (g.order() == 0) return {};
  const std::size_t omega = maximum_clique(g).size();
  return detail::CliqueSearch(g).all_of_size(omega, limit);
}

struct CliqueReport {
  int max_size = 0;
  int line_cliques = 0;
  std::vector<std::vector<int>> non_line_cliques;
  // s > (t+1)(alpha-1): every (s+1)-clique must then be a line.
  bool lines_forced = false;
  // 1 + (t+1)(alpha-1), the size bound for cliques not inside a line.
  int non_line_bound = 0;
};

inline int non_line_clique_bound(const PgParams& p) { return 1 + (p.t + 1) * (p.alpha - 1); }

inline CliqueReport classify_cliques(const IncidenceStructure& s, const PgParams& params,
                                     std::size_t limit = kDefaultCliqueLimit) {
  const PointGraph pg = point_graph(s);
  if (is_complete(pg.graph)) throw PreconditionError("classify_cliques: point graph is complete");
  CliqueReport report;
  report.lines_forced = params.s > (params.t + 1) * (params.alpha - 1);
  report.non_line_bound = non_line_clique_bound(params);
  const auto cliques = max_cliques(pg.graph, limit);
  report.max_size = cliques.empty() ? 0 : static_cast<int>(cliques.front().size());
  for (const auto& c : cliques) {
    if (pg.is_line(c))
      ++report.line_cliques;
    else
      report.non_line_cliques.push_back(c);
  }
  return report;
}

inline CliqueReport classify_cliques(const Geometry& g, std::size_t limit = kDefaultCliqueLimit) {
  return classify_cliques(g.structure, g.params, limit);
}

struct NonLineCliqueAnalysis {
  int size = 0;
  int bound = 0;
  bool within_bound = false;
  bool equality = false;
  // Only meaningful when equality holds.
  bool lines_meet_in_zero_or_alpha = false;
  bool traces_form_design = false;
  // Non-empty line traces, relabelled to positions inside the clique.
  std::vector<std::vector<int>> traces;
};

inline NonLineCliqueAnalysis nonline_clique_analysis(const IncidenceStructure& s, const PgParams& params,
                                                     std::vector<int> clique) {
  std::sort(clique.begin(), clique.end());
  const PointGraph pg = point_graph(s);
  for (int v : clique)
    if (v < 0 || v >= s.point_count()) throw PreconditionError("nonline_clique_analysis: point out of range");
  for (std::size_t i = 0; i < clique.size(); ++i)
    for (std::size_t j = i + 1; j < clique.size(); ++j)
      if (!pg.graph.adjacent(clique[i], clique[j]))
        throw PreconditionError("nonline_clique_analysis: vertex set is not a clique");
  if (pg.inside_some_line(clique)) throw PreconditionError("nonline_clique_analysis: clique lies inside a line");

  NonLineCliqueAnalysis out;
  out.size = static_cast<int>(clique.size());
  out.bound = non_line_clique_bound(params);
  out.within_bound = out.size <= out.bound;
  out.equality = out.size == out.bound;

  bool zero_or_alpha = true;
  for (const auto& line : s.lines()) {
    std::vector<int> trace;
    for (std::size_t i = 0; i < clique.size(); ++i)
      if (std::binary_search(line.begin(), line.end(), clique[i])) trace.push_back(static_cast<int>(i));
    if (trace.empty()) continue;
    if (static_cast<int>(trace.size()) != params.alpha) zero_or_alpha = false;
    out.traces.push_back(std::move(trace));
  }
  if (out.equality) {
    out.lines_meet_in_zero_or_alpha = zero_or_alpha;
    if (zero_or_alpha && params.alpha >= 2 && out.size >= params.alpha) {
      try {
        validate_design(out.size, params.alpha, out.traces);
        out.traces_form_design = true;
      } catch (const ValidationError&) {
        out.traces_form_design = false;
      }
    }
  }
  return out;
}

}  // namespace geomcore
