#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <thread>
#include <vector>

namespace bentcert {

/// Worker-pool capability handed to the parallel sweeps. Results never depend
/// on `count`; only wall time does.
struct Workers {
  unsigned count = 1;

  /// Reads BENTCERT_THREADS, falling back to 1.
  static Workers from_env();
};

/// Runs body(begin, end) over a static partition of [0, n).
template <class Body>
void parallel_for(std::size_t n, const Workers& workers, Body&& body) {
  const std::size_t threads = std::min<std::size_t>(std::max(1u, workers.count), n);
  if (threads <= 1) {
    if (n > 0) body(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t begin = n * t / threads;
    const std::size_t end = n * (t + 1) / threads;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& th : pool) th.join();
}

/// Least index i in [0, n) with pred(i) true. Blocks are scanned in order so
/// the scan stops shortly after the first hit; the answer is schedule-free.
template <class Pred>
std::optional<std::size_t> find_first(std::size_t n, const Workers& workers, Pred&& pred,
                                      std::size_t block = 0) {
  if (block == 0) block = std::max<std::size_t>(64, std::size_t{std::max(1u, workers.count)} * 16);
  for (std::size_t start = 0; start < n; start += block) {
    const std::size_t len = std::min(block, n - start);
    std::atomic<std::size_t> best{n};
    parallel_for(len, workers, [&](std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i) {
        if (start + i >= best.load(std::memory_order_relaxed)) return;
        if (pred(start + i)) {
          std::size_t cur = best.load();
          while (start + i < cur && !best.compare_exchange_weak(cur, start + i)) {
          }
          return;
        }
      }
    });
    if (best.load() < n) return best.load();
  }
  return std::nullopt;
}

}  // namespace bentcert
