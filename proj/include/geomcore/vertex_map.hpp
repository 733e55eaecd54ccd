#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "geomcore/bitset.hpp"
#include "geomcore/graph.hpp"

namespace geomcore {

// A total map from source vertices 0..image.size()-1 into 0..target_size-1.
// Serves as homomorphism, endomorphism, automorphism and colouring witness.
struct VertexMap {
  std::size_t target_size = 0;
  std::vector<int> image;

  std::size_t source_size() const { return image.size(); }
  int operator()(std::size_t v) const { return image[v]; }

  bool is_total() const {
    return std::all_of(image.begin(), image.end(),
                       [&](int x) { return x >= 0 && static_cast<std::size_t>(x) < target_size; });
  }

  Bitset image_set() const {
    Bitset out(target_size);
    for (int x : image) out.set(static_cast<std::size_t>(x));
    return out;
  }
  std::size_t image_size() const { return image_set().count(); }
  bool is_injective() const { return image_size() == image.size(); }

  friend bool operator==(const VertexMap&, const VertexMap&) = default;
  friend auto operator<=>(const VertexMap& a, const VertexMap& b) { return a.image <=> b.image; }
};

inline bool is_homomorphism(const Graph& x, const Graph& y, const VertexMap& f) {
  if (f.source_size() != x.order() || f.target_size != y.order() || !f.is_total()) return false;
  for (auto [u, v] : x.edges())
    if (!y.adjacent(f(u), f(v))) return false;
  return true;
}

inline bool is_proper_coloring(const Graph& x, const VertexMap& colors, std::size_t q) {
  if (colors.source_size() != x.order() || colors.target_size != q || !colors.is_total()) return false;
  for (auto [u, v] : x.edges())
    if (colors(u) == colors(v)) return false;
  return true;
}

inline bool is_automorphism(const Graph& x, const VertexMap& f) {
  return is_homomorphism(x, x, f) && f.is_injective();
}

inline VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
  VertexMap out{outer.target_size, std::vector<int>(inner.source_size())};
  for (std::size_t v = 0; v < inner.source_size(); ++v) out.image[v] = outer(inner(v));
  return out;
}

inline VertexMap inverse_permutation(const VertexMap& f) {
  VertexMap out{f.source_size(), std::vector<int>(f.target_size, -1)};
  for (std::size_t v = 0; v < f.source_size(); ++v) out.image[f(v)] = static_cast<int>(v);
  return out;
}

inline VertexMap identity_map(std::size_t n) {
  VertexMap out{n, std::vector<int>(n)};
  for (std::size_t v = 0; v < n; ++v) out.image[v] = static_cast<int>(v);
  return out;
}

}  // namespace geomcore
