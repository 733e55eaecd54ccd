#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "geomcore/error.hpp"
#include "geomcore/geometry.hpp"
#include "geomcore/graph.hpp"
#include "geomcore/vertex_map.hpp"

namespace geomcore {

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

class PrimeField {
 public:
  explicit PrimeField(int p) : p_(p) {
    if (!is_prime(p)) throw UnsupportedError("PrimeField: order " + std::to_string(p) + " is not prime");
  }
  int order() const { return p_; }
  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return ((a - b) % p_ + p_) % p_; }
  int mul(int a, int b) const { return static_cast<int>(static_cast<long long>(a) * b % p_); }
  int inv(int a) const {
    if (a % p_ == 0) throw PreconditionError("PrimeField: zero has no inverse");
    int result = 1;
    for (int e = p_ - 2, base = a % p_; e > 0; e >>= 1, base = mul(base, base))
      if (e & 1) result = mul(result, base);
    return result;
  }

 private:
  int p_;
};

// Binary linear code of length <= 64; words are bit masks, bit i = coordinate i.
class BinaryCode {
 public:
  BinaryCode(int length, std::vector<std::uint64_t> generators) : length_(length), generators_(std::move(generators)) {
    if (length < 1 || length > 64) throw PreconditionError("BinaryCode: length must be in 1..64");
    if (rank_of(generators_) != generators_.size()) throw PreconditionError("BinaryCode: generator rows are dependent");
  }

  // Extended Hamming code of length 2^m: even-weight words whose set
  // coordinates XOR to zero.
  static BinaryCode extended_hamming(int m) {
    if (m < 1 || m > 6) throw PreconditionError("extended_hamming: m must be in 1..6");
    const int n = 1 << m;
    std::vector<std::uint64_t> rows;
    // Weight-4 words {0, i, j, i^j} together with 1...1 span the code.
    for (int i = 1; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int k = i ^ j;
        if (k <= j) continue;
        const std::uint64_t w = (std::uint64_t{1} << 0) | (std::uint64_t{1} << i) | (std::uint64_t{1} << j) |
                                (std::uint64_t{1} << k);
        auto trial = rows;
        trial.push_back(w);
        if (rank_of(trial) == trial.size()) rows = std::move(trial);
      }
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    auto trial = rows;
    trial.push_back(all);
    if (rank_of(trial) == trial.size()) rows = std::move(trial);
    return BinaryCode(n, std::move(rows));
  }

  int length() const { return length_; }
  int dimension() const { return static_cast<int>(generators_.size()); }
  const std::vector<std::uint64_t>& generators() const { return generators_; }

  bool contains(std::uint64_t word) const {
    auto trial = generators_;
    trial.push_back(word);
    return rank_of(trial) == generators_.size();
  }

  std::vector<std::uint64_t> codewords() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << generators_.size()); ++mask) {
      std::uint64_t w = 0;
      for (std::size_t i = 0; i < generators_.size(); ++i)
        if ((mask >> i) & 1) w ^= generators_[i];
      out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static std::size_t rank_of(std::vector<std::uint64_t> rows) {
    std::size_t rank = 0;
    for (int bit = 63; bit >= 0; --bit) {
      const std::uint64_t mask = std::uint64_t{1} << bit;
      std::size_t pivot = rank;
      while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
      if (pivot == rows.size()) continue;
      std::swap(rows[rank], rows[pivot]);
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
      ++rank;
    }
    return rank;
  }

  int length_;
  std::vector<std::uint64_t> generators_;
};

// ---------------------------------------------------------------------------
// Designs.

inline Design fano() {
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < 7; ++i) blocks.push_back({i, (i + 1) % 7, (i + 3) % 7});
  return validate_design(7, 3, std::move(blocks));
}

// Affine plane of order 3; point (x, y) has index 3x + y.
inline Design sts9() {
  std::vector<std::vector<int>> blocks;
  for (int slope = 0; slope < 3; ++slope)
    for (int icept = 0; icept < 3; ++icept) {
      std::vector<int> block;
      for (int x = 0; x < 3; ++x) block.push_back(3 * x + (slope * x + icept) % 3);
      blocks.push_back(block);
    }
  for (int x = 0; x < 3; ++x) blocks.push_back({3 * x, 3 * x + 1, 3 * x + 2});
  return validate_design(9, 3, std::move(blocks));
}

// Points and lines of the binary projective 3-space: point index = vector - 1
// for the 15 nonzero 4-bit vectors; lines are {x, y, x^y}.
inline Design sts15_pg32() {
  std::vector<std::vector<int>> blocks;
  for (int x = 1; x < 16; ++x)
    for (int y = x + 1; y < 16; ++y)
      if ((x ^ y) > y) blocks.push_back({x - 1, y - 1, (x ^ y) - 1});
  return validate_design(15, 3, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Orthogonal arrays. Column c = i*n + j; row 0 holds i, row 1 holds j and
// row 1+c holds i + c*j over the prime field.

inline OrthogonalArray mols_oa(int k, int n) {
  if (n < 2) throw PreconditionError("mols_oa: order must be at least 2");
  if (!is_prime(n)) throw UnsupportedError("mols_oa: composite order " + std::to_string(n) + " is not supported");
  if (k < 3 || k > n + 1) throw PreconditionError("mols_oa: require 3 <= k <= n+1");
  PrimeField f(n);
  std::vector<std::vector<int>> columns;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> col{i, j};
      for (int c = 1; c <= k - 2; ++c) col.push_back(f.add(i, f.mul(c, j)));
      columns.push_back(std::move(col));
    }
  return validate_oa(k, n, std::move(columns));
}

enum class Latin4 { Z4, KleinFour };

// OA(3,4) from the Cayley table of Z4 or of the Klein four-group.
inline OrthogonalArray latin4(Latin4 which) {
  std::vector<std::vector<int>> columns;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) columns.push_back({i, j, which == Latin4::Z4 ? (i + j) % 4 : (i ^ j)});
  return validate_oa(3, 4, std::move(columns));
}

// ---------------------------------------------------------------------------
// Generalized quadrangles.

// Colexicographic ranking of k-subsets of {0..v-1}, identical to increasing
// order of their bit masks. Vertex i of johnson/kneser is subset_of_rank(i).
inline std::vector<std::uint64_t> colex_subsets(int v, int k) {
  if (v < 0 || v > 63 || k < 0 || k > v) throw PreconditionError("colex_subsets: require 0 <= k <= v <= 63");
  std::vector<std::uint64_t> out;
  if (k == 0) return {0};
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << v;
  while (mask < limit) {
    if (out.size() >= Graph::kMaxVertices) throw PreconditionError("colex_subsets: exceeds the 2^16 vertex budget");
    out.push_back(mask);
    // Gosper's hack: next mask with the same popcount.
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return out;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Rank of a subset in colex order: sum of C(element_i, i+1) over its sorted
// elements.
inline std::size_t colex_rank(std::uint64_t subset) {
  std::size_t rank = 0;
  int i = 0;
  while (subset) {
    const int e = std::countr_zero(subset);
    rank += binomial(e, ++i);
    subset &= subset - 1;
  }
  return rank;
}

// GQ(2,2): points are the 15 pairs of a 6-set (colex order), lines the 15
// partitions of the 6-set into three pairs.
inline IncidenceStructure gq22() {
  const auto pairs = colex_subsets(6, 2);
  std::vector<std::vector<int>> lines;
  for (std::size_t a = 0; a < pairs.size(); ++a)
    for (std::size_t b = a + 1; b < pairs.size(); ++b)
      for (std::size_t c = b + 1; c < pairs.size(); ++c)
        if ((pairs[a] | pairs[b] | pairs[c]) == 63)
          lines.push_back({static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)});
  IncidenceStructure s(15, std::move(lines));
  if (validate_geometry(s) != PgParams{2, 2, 1}) throw Error("gq22: built-in model failed validation");
  return s;
}

// GQ(2,4) as literal incidence data: the 27 lines of a cubic surface as
// points (a_i = i, b_j = 6 + j, c_ij = 12 + colex rank of {i, j}) and the 45
// tritangent planes as lines.
inline IncidenceStructure gq24() {
  static constexpr std::array<std::array<int, 3>, 45> kLines{{
      {0, 7, 12},   {0, 8, 13},   {0, 9, 14},   {0, 10, 15},  {0, 11, 16},  {1, 6, 12},   {1, 8, 17},
      {1, 9, 18},   {1, 10, 19},  {1, 11, 20},  {2, 6, 13},   {2, 7, 17},   {2, 9, 21},   {2, 10, 22},
      {2, 11, 23},  {3, 6, 14},   {3, 7, 18},   {3, 8, 21},   {3, 10, 24},  {3, 11, 25},  {4, 6, 15},
      {4, 7, 19},   {4, 8, 22},   {4, 9, 24},   {4, 11, 26},  {5, 6, 16},   {5, 7, 20},   {5, 8, 23},
      {5, 9, 25},   {5, 10, 26},  {12, 21, 26}, {12, 22, 25}, {12, 23, 24}, {13, 18, 26}, {13, 19, 25},
      {13, 20, 24}, {14, 17, 26}, {14, 19, 23}, {14, 20, 22}, {15, 17, 25}, {15, 18, 23}, {15, 20, 21},
      {16, 17, 24}, {16, 18, 22}, {16, 19, 21},
  }};
  std::vector<std::vector<int>> lines;
  for (const auto& l : kLines) lines.emplace_back(l.begin(), l.end());
  IncidenceStructure s(27, std::move(lines));
  if (validate_geometry(s) != PgParams{2, 4, 1}) throw Error("gq24: built-in incidence data failed validation");
  return s;
}

// ---------------------------------------------------------------------------
// Graph families.

inline Graph subset_graph(int v, int k, bool johnson) {
  if (k <= 0 || k >= v) throw PreconditionError("require 0 < k < v");
  if (v > 63 || binomial(v, k) > Graph::kMaxVertices)
    throw PreconditionError("binomial(v, k) exceeds the 2^16 vertex budget");
  const auto subsets = colex_subsets(v, k);
  GraphBuilder b(subsets.size());
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      const int meet = std::popcount(subsets[i] & subsets[j]);
      if (johnson ? meet == k - 1 : meet == 0) b.add_edge(i, j);
    }
  return std::move(b).build();
}

inline Graph johnson(int v, int k) { return subset_graph(v, k, true); }
inline Graph kneser(int v, int k) { return subset_graph(v, k, false); }

inline Graph petersen() { return kneser(5, 2); }

// Vertex i is the even-weight vector whose low n-1 bits are i; the top bit
// restores even parity.
inline std::uint32_t halved_cube_vector(int n, std::size_t index) {
  const auto low = static_cast<std::uint32_t>(index);
  return low | (static_cast<std::uint32_t>(std::popcount(low) & 1) << (n - 1));
}

inline Graph halved_cube(int n) {
  if (n < 2 || n > 16) throw PreconditionError("halved_cube: require 2 <= n <= 16");
  const std::size_t count = std::size_t{1} << (n - 1);
  GraphBuilder b(count);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (std::popcount(halved_cube_vector(n, i) ^ halved_cube_vector(n, j)) == 2) b.add_edge(i, j);
  return std::move(b).build();
}

inline Graph grid(int p, int q) {
  if (p < 1 || q < 1) throw PreconditionError("grid: require p, q >= 1");
  return cartesian_product(complete_graph(p), complete_graph(q));
}

// Colours each halved-cube vertex by its coset of the extended Hamming code
// inside the even-weight code; the coset is identified by the XOR of the set
// coordinates.
inline VertexMap extended_hamming_coloring(int n) {
  if (n < 4 || n > 16 || !std::has_single_bit(static_cast<unsigned>(n)))
    throw PreconditionError("extended_hamming_coloring: n must be a power of two in 4..16");
  const std::size_t count = std::size_t{1} << (n - 1);
  VertexMap colors{static_cast<std::size_t>(n), std::vector<int>(count)};
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t w = halved_cube_vector(n, i);
    int syndrome = 0;
    while (w) {
      syndrome ^= std::countr_zero(w);
      w &= w - 1;
    }
    colors.image[i] = syndrome;
  }
  return colors;
}

}  // namespace geomcore
