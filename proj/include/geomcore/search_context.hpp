#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>

namespace geomcore {

// Limits for one top-level search operation. `jobs` is the worker count for
// the branch-parallel searches; 1 runs everything on the calling thread.
struct SearchBudget {
  std::uint64_t nodes = 200'000'000;
  double seconds = 600.0;
  unsigned jobs = 1;
};

enum class Outcome { Found, None, Exhausted };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Found: return "found";
    case Outcome::None: return "none";
    case Outcome::Exhausted: return "exhausted";
  }
  return "exhausted";
}

// Shared accounting for every sub-search spawned by one operation. Workers
// charge nodes in batches; the first to cross a limit flips `exhausted`.
class SearchContext {
 public:
  explicit SearchContext(const SearchBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {
    if (budget_.jobs == 0) budget_.jobs = 1;
  }
  SearchContext(const SearchContext&) = delete;
  SearchContext& operator=(const SearchContext&) = delete;

  // Returns false once the budget is spent.
  bool charge(std::uint64_t nodes) {
    if (exhausted_.load(std::memory_order_relaxed)) return false;
    const auto total = nodes_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
    if (total > budget_.nodes || elapsed_seconds() > budget_.seconds) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }
  unsigned jobs() const { return budget_.jobs; }
  const SearchBudget& budget() const { return budget_; }
  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  SearchBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

}  // namespace geomcore
