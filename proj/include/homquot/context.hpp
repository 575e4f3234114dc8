#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace homquot {

/// Resource caps and parallelism settings threaded through scan-heavy
/// operations.  Defaults are desk scale.
struct Ctx {
  std::uint64_t max_enum = 1u << 20;  ///< max projective points per scan
  std::size_t max_lattice = 4096;     ///< max ideals in a lattice closure
  std::size_t max_op_dim = 16;        ///< max operator-span dim for left-quotient scans
  int jobs = 1;                       ///< worker threads for scan loops
};

/// Finds the least index in [0, n) satisfying pred, or nullopt.  With
/// jobs > 1 the range is split into contiguous chunks; each worker may
/// stop early once a smaller hit is known, so the returned index is the
/// global minimum regardless of thread count.
inline std::optional<std::size_t> least_index_where(
    std::size_t n, int jobs, const std::function<bool(std::size_t)>& pred) {
  if (n == 0) return std::nullopt;
  int workers = jobs < 1 ? 1 : jobs;
  if (static_cast<std::size_t>(workers) > n) workers = static_cast<int>(n);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i)
      if (pred(i)) return i;
    return std::nullopt;
  }
  std::atomic<std::size_t> best{n};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = chunk * static_cast<std::size_t>(w);
    std::size_t hi = lo + chunk < n ? lo + chunk : n;
    pool.emplace_back([lo, hi, &best, &pred] {
      for (std::size_t i = lo; i < hi; ++i) {
        if (best.load(std::memory_order_relaxed) <= lo) return;
        if (pred(i)) {
          std::size_t cur = best.load(std::memory_order_relaxed);
          while (i < cur &&
                 !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
          }
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  std::size_t r = best.load();
  if (r == n) return std::nullopt;
  return r;
}

}  // namespace homquot
