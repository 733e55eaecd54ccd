#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "geomcore/bitset.hpp"
#include "geomcore/error.hpp"

namespace geomcore {

// Finite simple graph on vertices 0..n-1, adjacency rows stored as bitsets.
// Values are immutable once built; use GraphBuilder to construct one.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = std::size_t{1} << 16;

  Graph() = default;

  std::size_t order() const { return adj_.size(); }
  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
  }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  const Bitset& neighbors(std::size_t u) const { return adj_[u]; }
  std::size_t degree(std::size_t u) const { return adj_[u].count(); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t u = 0; u < order(); ++u)
      adj_[u].for_each([&](std::size_t v) {
        if (u < v) out.emplace_back(static_cast<int>(u), static_cast<int>(v));
      });
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<Bitset> adj_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) {
    if (n > Graph::kMaxVertices) throw PreconditionError("graph exceeds the 2^16 vertex budget");
    adj_.assign(n, Bitset(n));
  }

  std::size_t order() const { return adj_.size(); }

  GraphBuilder& add_edge(std::size_t u, std::size_t v) {
    if (u >= adj_.size() || v >= adj_.size()) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
    return *this;
  }
  bool has_edge(std::size_t u, std::size_t v) const { return adj_[u].test(v); }

  Graph build() && {
    Graph g;
    g.adj_ = std::move(adj_);
#ifndef NDEBUG
    for (std::size_t u = 0; u < g.order(); ++u) {
      assert(!g.adj_[u].test(u));
      g.adj_[u].for_each([&](std::size_t v) { assert(g.adj_[v].test(u)); });
    }
#endif
    return g;
  }

 private:
  std::vector<Bitset> adj_;
};

struct SrgParams {
  int n = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;

  // k(k - lambda - 1) = (n - k - 1) mu
  bool satisfies_feasibility_identity() const {
    return static_cast<long long>(k) * (k - lambda - 1) == static_cast<long long>(n - k - 1) * mu;
  }
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

// Distance-regular intersection array {b_0..b_{d-1}; c_1..c_d}.
struct IntersectionArray {
  int diameter = 0;
  std::vector<int> b;
  std::vector<int> c;
  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

// ---------------------------------------------------------------------------
// Small named graphs.

inline Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph edgeless_graph(std::size_t n) { return GraphBuilder(n).build(); }

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

inline Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

// Complete multipartite graph with `parts` parts of size `part_size`;
// vertex v lies in part v / part_size.
inline Graph complete_multipartite(std::size_t parts, std::size_t part_size) {
  GraphBuilder b(parts * part_size);
  for (std::size_t u = 0; u < parts * part_size; ++u)
    for (std::size_t v = u + 1; v < parts * part_size; ++v)
      if (u / part_size != v / part_size) b.add_edge(u, v);
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Derived graphs.

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

// Vertex (u, v) of the product has index u * |H| + v.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t m = h.order();
  GraphBuilder b(g.order() * m);
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = 0; v < m; ++v) {
      h.neighbors(v).for_each([&](std::size_t w) {
        if (v < w) b.add_edge(u * m + v, u * m + w);
      });
      g.neighbors(u).for_each([&](std::size_t x) {
        if (u < x) b.add_edge(u * m + v, x * m + v);
      });
    }
  return std::move(b).build();
}

// Induced subgraph on `vertices`; vertex i of the result is vertices[i].
inline Graph induced(const Graph& g, std::span<const int> vertices) {
  GraphBuilder b(vertices.size());
  for (int v : vertices)
    if (v < 0 || static_cast<std::size_t>(v) >= g.order())
      throw PreconditionError("induced: vertex " + std::to_string(v) + " out of range");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j]) throw PreconditionError("induced: repeated vertex");
      if (g.adjacent(vertices[i], vertices[j])) b.add_edge(i, j);
    }
  return std::move(b).build();
}

inline Graph induced(const Graph& g, const Bitset& vertices) {
  auto list = vertices.to_vector();
  return induced(g, std::span<const int>(list));
}

// ---------------------------------------------------------------------------
// Predicates.

inline bool is_complete(const Graph& g) {
  return g.edge_count() * 2 == g.order() * (g.order() == 0 ? 0 : g.order() - 1);
}

inline std::optional<int> regular_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  const std::size_t k = g.degree(0);
  for (std::size_t u = 1; u < g.order(); ++u)
    if (g.degree(u) != k) return std::nullopt;
  return static_cast<int>(k);
}

// BFS distances from `source`; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, std::size_t source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](std::size_t v) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    });
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

inline std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.order());
  for (std::size_t u = 0; u < g.order(); ++u) d.push_back(bfs_distances(g, u));
  return d;
}

namespace detail {
inline void require_connected(const Graph& g, const char* op) {
  if (!is_connected(g)) throw PreconditionError(std::string(op) + ": input graph is disconnected");
}
}  // namespace detail

// Strongly regular parameters by direct common-neighbour counting. Returns
// nothing for graphs outside the precondition (disconnected, complete,
// edgeless, fewer than 3 vertices) as well as for non-SRGs.
inline std::optional<SrgParams> srg_check(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3 || g.edge_count() == 0 || is_complete(g) || !is_connected(g)) return std::nullopt;
  auto k = regular_degree(g);
  if (!k) return std::nullopt;
  int lambda = -1;
  int mu = -1;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      int common = static_cast<int>(g.neighbors(u).count_and(g.neighbors(v)));
      int& slot = g.adjacent(u, v) ? lambda : mu;
      if (slot < 0)
        slot = common;
      else if (slot != common)
        return std::nullopt;
    }
  return SrgParams{static_cast<int>(n), *k, lambda, mu};
}

inline std::optional<IntersectionArray> distance_regular_check(const Graph& g) {
  detail::require_connected(g, "distance_regular_check");
  if (g.order() == 0) return std::nullopt;
  auto dist = distance_matrix(g);
  int diameter = 0;
  for (const auto& row : dist) diameter = std::max(diameter, *std::max_element(row.begin(), row.end()));
  std::vector<int> b(diameter + 1, -1), c(diameter + 1, -1);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) {
      const int i = dist[x][y];
      int up = 0;
      int down = 0;
      g.neighbors(y).for_each([&](std::size_t z) {
        if (dist[x][z] == i + 1) ++up;
        if (dist[x][z] == i - 1) ++down;
      });
      if (b[i] < 0) b[i] = up;
      if (c[i] < 0) c[i] = down;
      if (b[i] != up || c[i] != down) return std::nullopt;
    }
  IntersectionArray out;
  out.diameter = diameter;
  out.b.assign(b.begin(), b.begin() + diameter);
  out.c.assign(c.begin() + 1, c.end());
  return out;
}

inline bool has_triangle(const Graph& g) {
  for (std::size_t u = 0; u < g.order(); ++u) {
    bool found = false;
    g.neighbors(u).for_each([&](std::size_t v) {
      if (u < v && g.neighbors(u).intersects(g.neighbors(v))) found = true;
    });
    if (found) return true;
  }
  return false;
}

// Length of a shortest odd cycle; empty iff the graph is bipartite. A BFS
// from every root finds the shortest odd closed walk through that root as an
// edge joining two vertices on the same level.
inline std::optional<int> odd_girth(const Graph& g) {
  std::optional<int> best;
  for (std::size_t r = 0; r < g.order(); ++r) {
    auto dist = bfs_distances(g, r);
    for (auto [u, v] : g.edges())
      if (dist[u] >= 0 && dist[u] == dist[v]) {
        int len = 2 * dist[u] + 1;
        if (!best || len < *best) best = len;
      }
  }
  return best;
}

// True iff every 2-arc (u, v, w) lies on a shortest odd cycle. With g the
// odd girth, a closed walk u-v-w-...-u of length g is necessarily a simple
// cycle (a repeated vertex would split off a shorter odd closed walk), so it
// suffices that some walk of length g - 2 joins w back to u.
inline bool two_arc_odd_cycle_condition(const Graph& g) {
  detail::require_connected(g, "two_arc_odd_cycle_condition");
  auto girth = odd_girth(g);
  if (!girth) throw PreconditionError("two_arc_odd_cycle_condition: no odd cycle (graph is bipartite)");
  const int steps = *girth - 2;
  const std::size_t n = g.order();
  for (std::size_t w = 0; w < n; ++w) {
    Bitset reach(n);
    reach.set(w);
    for (int s = 0; s < steps; ++s) {
      Bitset next(n);
      reach.for_each([&](std::size_t x) { next |= g.neighbors(x); });
      reach = std::move(next);
    }
    // u ranges over the far ends of 2-arcs starting at w.
    Bitset ends(n);
    g.neighbors(w).for_each([&](std::size_t v) { ends |= g.neighbors(v); });
    ends.reset(w);
    if (!ends.is_subset_of(reach)) return false;
  }
  return true;
}

}  // namespace geomcore
