#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace rootspin::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(task) for every task in [0, tasks) on up to `threads` workers.
// Tasks are claimed dynamically; callers keep per-task outputs so that the
// aggregate does not depend on scheduling. The first exception is rethrown.
template <class Body>
void parallel_for(std::size_t tasks, unsigned threads, Body&& body) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, threads), tasks);
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) body(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < tasks; t = next++) {
          try {
            body(t);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = tasks;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

// Number of leading sign bits to fix per task so that there is enough work
// to spread over `threads` workers.
inline unsigned prefix_bits(std::size_t length, unsigned threads, std::size_t min_length = 16) {
  if (threads <= 1 || length < min_length) return 0;
  unsigned bits = 0;
  while ((1u << bits) < threads) ++bits;
  bits += 3;
  return static_cast<unsigned>(std::min<std::size_t>(bits, length - 10));
}

}  // namespace rootspin::detail
