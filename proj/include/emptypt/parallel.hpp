#pragma once

// Deterministic parallel loops over trial indices. Results never depend on
// the number of threads or on scheduling.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace emptypt {

inline unsigned worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(hw, 16u);
}

/// Smallest index in [0, count) with pred(index) true. Indices are claimed in
/// increasing order; once a hit is known, larger indices are skipped.
template <class Pred>
std::optional<std::size_t> first_index(std::size_t count, Pred pred) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i >= best.load()) return;
      if (pred(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    }
  };
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (best.load() == count) return std::nullopt;
  return best.load();
}

/// Calls f(index) for every index in [0, count), in parallel.
template <class F>
void parallel_for(std::size_t count, F f) {
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) f(i);
  };
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
}

}  // namespace emptypt
