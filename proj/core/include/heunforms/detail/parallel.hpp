#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace heunforms::detail {

inline unsigned effective_threads(long requested, std::size_t work_items) {
  unsigned t = requested > 0 ? static_cast<unsigned>(requested)
                             : std::max(1u, std::thread::hardware_concurrency());
  if (work_items < t) t = static_cast<unsigned>(work_items ? work_items : 1);
  return t;
}

/// Runs body(i) for i in [0, count) on the requested number of threads
/// (0 = hardware concurrency). The body must write its result into a
/// preallocated slot keyed by i; aggregation order is then independent of
/// scheduling.
template <class Body>
void parallel_for(std::size_t count, long threads, Body&& body) {
  if (count == 0) return;
  const unsigned t = effective_threads(threads, count);
  if (t <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  const std::size_t chunk = (count + t - 1) / t;
  for (unsigned w = 0; w < t; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace heunforms::detail
