#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace stk {

/// Worker cap: STORMER_THREADS when set to a positive integer, otherwise the
/// machine's hardware concurrency (at least 1).
unsigned worker_count();

/// Splits [begin, end) into fixed-size chunks and runs fn(lo, hi, index) on
/// up to `workers` threads. Chunk boundaries depend only on `chunk`, never on
/// the worker count, so per-chunk results are reproducible.
template <class Fn>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, std::uint64_t chunk, unsigned workers,
                     Fn&& fn) {
  if (begin >= end) return;
  const std::uint64_t count = (end - begin + chunk - 1) / chunk;
  workers = static_cast<unsigned>(std::clamp<std::uint64_t>(workers, 1, count));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      const std::uint64_t lo = begin + i * chunk;
      const std::uint64_t hi = std::min(end, lo + chunk);
      try {
        fn(lo, hi, i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace stk
