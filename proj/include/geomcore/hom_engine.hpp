#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "geomcore/bitset.hpp"
#include "geomcore/graph.hpp"
#include "geomcore/parallel.hpp"
#include "geomcore/search_context.hpp"

namespace geomcore::detail {

// A homomorphism search problem: map every source vertex into its domain so
// that edges go to edges. `injective` adds all-different, `induced` also
// sends non-edges to non-edges (with injective: isomorphism search).
// `cliques` are source cliques whose images must be distinct; each one is
// checked with a pigeonhole test on the union of its domains.
struct HomProblem {
  const Graph* source = nullptr;
  const Graph* target = nullptr;
  bool injective = false;
  bool induced = false;
  std::vector<Bitset> domains;
  std::vector<std::vector<int>> cliques;
  // Optional filter on complete maps; rejected maps do not count as solutions.
  std::function<bool(const std::vector<int>&)> accept;
};

struct HomSearchOutput {
  Outcome outcome = Outcome::None;
  std::vector<std::vector<int>> solutions;
};

// Backtracking over vertex assignments with bitset domains. After every
// assignment edge constraints are propagated to arc consistency; the next
// variable is the one with the smallest domain (ties: larger source degree,
// then lower index); values are tried in increasing order. The first level
// of the tree is split across workers and results are merged in branch
// order, so output never depends on scheduling.
class HomEngine {
  using Word = Bitset::Word;

 public:
  HomEngine(const HomProblem& problem, SearchContext& ctx) : p_(problem), ctx_(ctx) {
    const Graph& x = *p_.source;
    const Graph& y = *p_.target;
    nx_ = x.order();
    ny_ = y.order();
    words_ = (ny_ + Bitset::kWordBits - 1) / Bitset::kWordBits;
    if (words_ == 0) words_ = 1;
    adj_y_.assign(ny_ * words_, 0);
    nonadj_y_.assign(ny_ * words_, 0);
    for (std::size_t t = 0; t < ny_; ++t) {
      std::copy_n(y.neighbors(t).words(), y.neighbors(t).word_count(), &adj_y_[t * words_]);
      Bitset non = ~y.neighbors(t);
      non.reset(t);
      std::copy_n(non.words(), non.word_count(), &nonadj_y_[t * words_]);
    }
    nbrs_x_.resize(nx_);
    nonnbrs_x_.resize(nx_);
    for (std::size_t u = 0; u < nx_; ++u)
      for (std::size_t v = 0; v < nx_; ++v) {
        if (u == v) continue;
        (x.adjacent(u, v) ? nbrs_x_[u] : nonnbrs_x_[u]).push_back(static_cast<int>(v));
      }
    for (const auto& c : p_.cliques)
      if (c.size() >= 3) cliques_.push_back(c);
  }

  // enumerate = false: stop at the first accepted solution.
  HomSearchOutput run(bool enumerate) {
    enumerate_ = enumerate;
    HomSearchOutput out;
    if (nx_ == 0) {
      out.outcome = Outcome::Found;
      out.solutions.emplace_back();
      return out;
    }
    std::vector<Word> root(nx_ * words_, 0);
    for (std::size_t u = 0; u < nx_; ++u) {
      const Bitset& d = p_.domains[u];
      std::copy_n(d.words(), d.word_count(), &root[u * words_]);
    }
    std::vector<int> all(nx_);
    for (std::size_t u = 0; u < nx_; ++u) all[u] = static_cast<int>(u);
    Worker root_worker(*this, std::numeric_limits<std::size_t>::max());
    if (!root_worker.propagate(root.data(), all) || !root_worker.hall(root.data())) {
      out.outcome = ctx_.exhausted() ? Outcome::Exhausted : Outcome::None;
      return out;
    }
    const int var = choose_variable(root.data());
    if (var < 0) {
      root_worker.leaf(root.data());
      out.solutions = std::move(root_worker.solutions);
      out.outcome = out.solutions.empty() ? Outcome::None : Outcome::Found;
      return out;
    }

    std::vector<int> values;
    for_each_bit(&root[var * words_], [&](std::size_t t) { values.push_back(static_cast<int>(t)); });
    struct BranchResult {
      Outcome outcome = Outcome::None;
      std::vector<std::vector<int>> solutions;
    };
    std::vector<BranchResult> branches(values.size());
    first_found_.store(std::numeric_limits<std::size_t>::max());

    for_each_branch(values.size(), ctx_.jobs(), [&](std::size_t i) {
      if (!enumerate_ && i > first_found_.load()) return;
      Worker w(*this, i);
      std::vector<Word> dom = root;
      assign(dom.data(), var, values[i]);
      Status st = Status::Continue;
      if (w.propagate(dom.data(), std::span<const int>(&var, 1)) && w.hall(dom.data())) st = w.search(dom.data(), 1);
      w.flush();
      branches[i].solutions = std::move(w.solutions);
      if (st == Status::Abort)
        branches[i].outcome = w.cancelled ? Outcome::None : Outcome::Exhausted;
      else
        branches[i].outcome = branches[i].solutions.empty() ? Outcome::None : Outcome::Found;
      if (branches[i].outcome == Outcome::Found && !enumerate_) {
        std::size_t cur = first_found_.load();
        while (i < cur && !first_found_.compare_exchange_weak(cur, i)) {
        }
      }
    });

    out.outcome = Outcome::None;
    for (auto& b : branches) {
      if (b.outcome == Outcome::Exhausted) {
        out.outcome = Outcome::Exhausted;
        break;
      }
      for (auto& s : b.solutions) out.solutions.push_back(std::move(s));
      if (b.outcome == Outcome::Found && !enumerate_) break;
    }
    if (out.outcome != Outcome::Exhausted) out.outcome = out.solutions.empty() ? Outcome::None : Outcome::Found;
    if (out.outcome == Outcome::Exhausted && !enumerate_) out.solutions.clear();
    return out;
  }

 private:
  enum class Status { Continue, Stop, Abort };

  template <class F>
  void for_each_bit(const Word* row, F&& f) const {
    for (std::size_t wi = 0; wi < words_; ++wi) {
      Word w = row[wi];
      while (w) {
        f(wi * Bitset::kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }
  std::size_t count(const Word* row) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_; ++i) c += static_cast<std::size_t>(std::popcount(row[i]));
    return c;
  }
  int single(const Word* row) const {
    for (std::size_t i = 0; i < words_; ++i)
      if (row[i]) return static_cast<int>(i * Bitset::kWordBits + static_cast<std::size_t>(std::countr_zero(row[i])));
    return -1;
  }
  void assign(Word* dom, int var, int value) const {
    Word* row = dom + static_cast<std::size_t>(var) * words_;
    std::fill_n(row, words_, Word{0});
    row[static_cast<std::size_t>(value) / Bitset::kWordBits] |= Word{1} << (static_cast<std::size_t>(value) % Bitset::kWordBits);
  }

  int choose_variable(const Word* dom) const {
    int best = -1;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    std::size_t best_deg = 0;
    for (std::size_t u = 0; u < nx_; ++u) {
      const std::size_t c = count(dom + u * words_);
      if (c <= 1) continue;
      const std::size_t deg = nbrs_x_[u].size();
      if (c < best_size || (c == best_size && deg > best_deg)) {
        best = static_cast<int>(u);
        best_size = c;
        best_deg = deg;
      }
    }
    return best;
  }

  // Per-branch mutable state: queue, scratch rows, local node count.
  struct Worker {
    Worker(HomEngine& e, std::size_t branch)
        : engine(e), branch(branch), queued(e.nx_, 0), support(e.words_), scratch(e.words_), levels(e.nx_ + 2) {
      queue.reserve(e.nx_);
    }

    bool tick() {
      if (++pending >= 64) return flush();
      return true;
    }
    bool flush() {
      const bool ok = engine.ctx_.charge(pending);
      pending = 0;
      if (!engine.enumerate_ && branch > engine.first_found_.load(std::memory_order_relaxed)) {
        cancelled = true;
        return false;
      }
      return ok;
    }

    bool propagate(Word* dom, std::span<const int> changed) {
      const std::size_t W = engine.words_;
      queue.clear();
      for (int u : changed)
        if (!queued[u]) queued[u] = 1, queue.push_back(u);
      bool ok = true;
      for (std::size_t head = 0; head < queue.size() && ok; ++head) {
        const int w = queue[head];
        queued[w] = 0;
        Word* dw = dom + static_cast<std::size_t>(w) * W;
        const std::size_t size = engine.count(dw);
        if (size == 0) {
          ok = false;
          break;
        }
        std::fill(support.begin(), support.end(), Word{0});
        engine.for_each_bit(dw, [&](std::size_t t) {
          const Word* row = &engine.adj_y_[t * W];
          for (std::size_t i = 0; i < W; ++i) support[i] |= row[i];
        });
        for (int u : engine.nbrs_x_[w]) {
          if (!restrict(dom, u, support.data())) {
            ok = false;
            break;
          }
        }
        if (!ok || size != 1) continue;
        const int t = engine.single(dw);
        if (engine.p_.injective) {
          const std::size_t wi = static_cast<std::size_t>(t) / Bitset::kWordBits;
          const Word bit = Word{1} << (static_cast<std::size_t>(t) % Bitset::kWordBits);
          for (std::size_t u = 0; u < engine.nx_ && ok; ++u) {
            if (static_cast<int>(u) == w) continue;
            Word* du = dom + u * W;
            if (du[wi] & bit) {
              du[wi] &= ~bit;
              if (engine.count(du) == 0) ok = false;
              if (!queued[u]) queued[u] = 1, queue.push_back(static_cast<int>(u));
            }
          }
        }
        if (ok && engine.p_.induced) {
          const Word* non = &engine.nonadj_y_[static_cast<std::size_t>(t) * W];
          for (int u : engine.nonnbrs_x_[w])
            if (!restrict(dom, u, non)) {
              ok = false;
              break;
            }
        }
      }
      if (!ok)
        for (int u : queue) queued[u] = 0;
      return ok;
    }

    // dom[u] &= mask; enqueue u on change. False on wipe-out.
    bool restrict(Word* dom, int u, const Word* mask) {
      const std::size_t W = engine.words_;
      Word* du = dom + static_cast<std::size_t>(u) * W;
      bool changed = false;
      bool nonempty = false;
      for (std::size_t i = 0; i < W; ++i) {
        const Word nw = du[i] & mask[i];
        changed |= nw != du[i];
        du[i] = nw;
        nonempty |= nw != 0;
      }
      if (!nonempty) return false;
      if (changed && !queued[u]) queued[u] = 1, queue.push_back(u);
      return true;
    }

    // Pigeonhole over every source clique: its vertices need distinct images.
    bool hall(const Word* dom) {
      const std::size_t W = engine.words_;
      for (const auto& c : engine.cliques_) {
        std::fill(scratch.begin(), scratch.end(), Word{0});
        for (int u : c) {
          const Word* du = dom + static_cast<std::size_t>(u) * W;
          for (std::size_t i = 0; i < W; ++i) scratch[i] |= du[i];
        }
        if (engine.count(scratch.data()) < c.size()) return false;
      }
      return true;
    }

    void leaf(const Word* dom) {
      std::vector<int> image(engine.nx_);
      for (std::size_t u = 0; u < engine.nx_; ++u) image[u] = engine.single(dom + u * engine.words_);
      if (engine.p_.accept && !engine.p_.accept(image)) return;
      solutions.push_back(std::move(image));
    }

    Status search(const Word* dom, std::size_t depth) {
      if (!tick()) return Status::Abort;
      const int var = engine.choose_variable(dom);
      if (var < 0) {
        const std::size_t before = solutions.size();
        leaf(dom);
        return (!engine.enumerate_ && solutions.size() > before) ? Status::Stop : Status::Continue;
      }
      const std::size_t W = engine.words_;
      auto& child = levels[depth];
      const Word* row = dom + static_cast<std::size_t>(var) * W;
      std::vector<int> values;
      engine.for_each_bit(row, [&](std::size_t t) { values.push_back(static_cast<int>(t)); });
      for (int t : values) {
        child.assign(dom, dom + engine.nx_ * W);
        engine.assign(child.data(), var, t);
        if (!propagate(child.data(), std::span<const int>(&var, 1)) || !hall(child.data())) continue;
        const Status st = search(child.data(), depth + 1);
        if (st != Status::Continue) return st;
      }
      return Status::Continue;
    }

    HomEngine& engine;
    std::size_t branch;
    std::vector<char> queued;
    std::vector<int> queue;
    std::vector<Word> support;
    std::vector<Word> scratch;
    std::vector<std::vector<Word>> levels;
    std::vector<std::vector<int>> solutions;
    std::uint64_t pending = 0;
    bool cancelled = false;
  };

  const HomProblem& p_;
  SearchContext& ctx_;
  std::size_t nx_ = 0;
  std::size_t ny_ = 0;
  std::size_t words_ = 1;
  std::vector<Word> adj_y_;
  std::vector<Word> nonadj_y_;
  std::vector<std::vector<int>> nbrs_x_;
  std::vector<std::vector<int>> nonnbrs_x_;
  std::vector<std::vector<int>> cliques_;
  bool enumerate_ = false;
  std::atomic<std::size_t> first_found_{std::numeric_limits<std::size_t>::max()};
};

inline HomSearchOutput run_hom_search(const HomProblem& problem, SearchContext& ctx, bool enumerate) {
  HomEngine engine(problem, ctx);
  return engine.run(enumerate);
}

}  // namespace geomcore::detail
