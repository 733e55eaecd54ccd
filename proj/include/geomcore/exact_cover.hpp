#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "geomcore/error.hpp"
#include "geomcore/parallel.hpp"
#include "geomcore/search_context.hpp"

namespace geomcore {

struct ExactCoverResult {
  Outcome outcome = Outcome::None;
  // Each solution is the sorted list of chosen option indices.
  std::vector<std::vector<int>> solutions;
  bool limit_hit = false;
};

// Dancing-links exact cover: pick the item with the fewest remaining
// options (lowest index on ties), branch on its options in insertion order,
// remove every item the chosen option covers. The first level is split
// across workers; results are merged in branch order.
class ExactCover {
 public:
  explicit ExactCover(std::size_t items) : items_(items) {
    const std::size_t headers = items + 1;
    left_.resize(headers);
    right_.resize(headers);
    up_.resize(headers);
    down_.resize(headers);
    column_.resize(headers);
    row_.assign(headers, -1);
    size_.assign(headers, 0);
    for (std::size_t i = 0; i < headers; ++i) {
      left_[i] = static_cast<int>(i == 0 ? items : i - 1);
      right_[i] = static_cast<int>(i == items ? 0 : i + 1);
      up_[i] = down_[i] = static_cast<int>(i);
      column_[i] = static_cast<int>(i);
    }
  }

  std::size_t item_count() const { return items_; }
  std::size_t option_count() const { return options_; }

  // Items are 0-based. Returns the option index.
  int add_option(std::span<const int> items) {
    if (items.empty()) throw PreconditionError("ExactCover: empty option");
    std::vector<int> sorted(items.begin(), items.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw PreconditionError("ExactCover: option repeats an item");
    const int id = static_cast<int>(options_++);
    int first = -1;
    for (int item : sorted) {
      if (item < 0 || static_cast<std::size_t>(item) >= items_) throw PreconditionError("ExactCover: item out of range");
      const int col = item + 1;
      const int node = static_cast<int>(left_.size());
      left_.push_back(node);
      right_.push_back(node);
      up_.push_back(up_[col]);
      down_.push_back(col);
      column_.push_back(col);
      row_.push_back(id);
      down_[up_[col]] = node;
      up_[col] = node;
      ++size_[col];
      if (first < 0) {
        first = node;
      } else {
        left_[node] = left_[first];
        right_[node] = first;
        right_[left_[first]] = node;
        left_[first] = node;
      }
    }
    return id;
  }

  ExactCoverResult solve_first(SearchContext& ctx) const { return solve(ctx, false, 0); }
  // Enumerate every exact cover; stops with limit_hit once more than `limit` exist.
  ExactCoverResult solve_all(SearchContext& ctx, std::size_t limit) const { return solve(ctx, true, limit); }

 private:
  struct Worker {
    Worker(const ExactCover& ec, std::size_t branch, std::atomic<std::size_t>& first_found, SearchContext& ctx,
           bool enumerate, std::size_t limit)
        : ec(ec),
          branch(branch),
          first_found(first_found),
          ctx(ctx),
          enumerate(enumerate),
          limit(limit),
          left(ec.left_),
          right(ec.right_),
          up(ec.up_),
          down(ec.down_),
          size(ec.size_) {}

    void cover(int c) {
      right[left[c]] = right[c];
      left[right[c]] = left[c];
      for (int i = down[c]; i != c; i = down[i])
        for (int j = right[i]; j != i; j = right[j]) {
          down[up[j]] = down[j];
          up[down[j]] = up[j];
          --size[ec.column_[j]];
        }
    }
    void uncover(int c) {
      for (int i = up[c]; i != c; i = up[i])
        for (int j = left[i]; j != i; j = left[j]) {
          ++size[ec.column_[j]];
          down[up[j]] = j;
          up[down[j]] = j;
        }
      right[left[c]] = c;
      left[right[c]] = c;
    }
    void choose(int r) {
      for (int j = right[r]; j != r; j = right[j]) cover(ec.column_[j]);
    }
    void unchoose(int r) {
      for (int j = left[r]; j != r; j = left[j]) uncover(ec.column_[j]);
    }
    int pick_column() const {
      int best = -1;
      int best_size = std::numeric_limits<int>::max();
      for (int c = right[0]; c != 0; c = right[c])
        if (size[c] < best_size) best = c, best_size = size[c];
      return best;
    }

    bool tick() {
      if (++pending < 64) return true;
      return flush();
    }
    bool flush() {
      const bool ok = ctx.charge(pending);
      pending = 0;
      if (!enumerate && branch > first_found.load(std::memory_order_relaxed)) {
        cancelled = true;
        return false;
      }
      return ok;
    }

    // false = stop (found in first mode, limit hit, or aborted)
    bool search() {
      if (!tick()) {
        aborted = true;
        return false;
      }
      if (right[0] == 0) {
        std::vector<int> sol;
        for (int r : stack) sol.push_back(ec.row_[r]);
        std::sort(sol.begin(), sol.end());
        solutions.push_back(std::move(sol));
        if (!enumerate) return false;
        if (solutions.size() > limit) {
          limit_hit = true;
          return false;
        }
        return true;
      }
      const int c = pick_column();
      if (size[c] == 0) return true;
      cover(c);
      for (int r = down[c]; r != c; r = down[r]) {
        stack.push_back(r);
        choose(r);
        const bool go_on = search();
        unchoose(r);
        stack.pop_back();
        if (!go_on) {
          uncover(c);
          return false;
        }
      }
      uncover(c);
      return true;
    }

    const ExactCover& ec;
    std::size_t branch;
    std::atomic<std::size_t>& first_found;
    SearchContext& ctx;
    bool enumerate;
    std::size_t limit;
    std::vector<int> left, right, up, down, size;
    std::vector<int> stack;
    std::vector<std::vector<int>> solutions;
    std::uint64_t pending = 0;
    bool aborted = false;
    bool cancelled = false;
    bool limit_hit = false;
  };

  ExactCoverResult solve(SearchContext& ctx, bool enumerate, std::size_t limit) const {
    ExactCoverResult out;
    std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};
    Worker root(*this, std::numeric_limits<std::size_t>::max(), first_found, ctx, enumerate, limit);
    if (root.right[0] == 0) {
      out.outcome = Outcome::Found;
      out.solutions.emplace_back();
      return out;
    }
    const int c = root.pick_column();
    std::vector<int> rows;
    for (int r = root.down[c]; r != c; r = root.down[r]) rows.push_back(r);
    struct Branch {
      Outcome outcome = Outcome::None;
      std::vector<std::vector<int>> solutions;
      bool limit_hit = false;
    };
    std::vector<Branch> branches(rows.size());
    detail::for_each_branch(rows.size(), ctx.jobs(), [&](std::size_t i) {
      if (!enumerate && i > first_found.load()) return;
      Worker w(*this, i, first_found, ctx, enumerate, limit);
      w.cover(c);
      w.stack.push_back(rows[i]);
      w.choose(rows[i]);
      w.search();
      w.flush();
      auto& b = branches[i];
      b.solutions = std::move(w.solutions);
      b.limit_hit = w.limit_hit;
      if (w.aborted && !w.cancelled)
        b.outcome = Outcome::Exhausted;
      else
        b.outcome = b.solutions.empty() ? Outcome::None : Outcome::Found;
      if (b.outcome == Outcome::Found && !enumerate) {
        std::size_t cur = first_found.load();
        while (i < cur && !first_found.compare_exchange_weak(cur, i)) {
        }
      }
    });
    for (auto& b : branches) {
      if (b.outcome == Outcome::Exhausted) {
        out.outcome = Outcome::Exhausted;
        break;
      }
      for (auto& s : b.solutions) out.solutions.push_back(std::move(s));
      if (enumerate && (b.limit_hit || out.solutions.size() > limit)) {
        out.limit_hit = true;
        break;
      }
      if (b.outcome == Outcome::Found && !enumerate) break;
    }
    if (out.outcome != Outcome::Exhausted) out.outcome = out.solutions.empty() ? Outcome::None : Outcome::Found;
    if (out.limit_hit) out.solutions.resize(std::min(out.solutions.size(), limit));
    if (!enumerate && out.solutions.size() > 1) out.solutions.resize(1);
    return out;
  }

  std::size_t items_;
  std::size_t options_ = 0;
  std::vector<int> left_, right_, up_, down_, column_, row_, size_;
};

}  // namespace geomcore
