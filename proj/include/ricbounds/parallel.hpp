#ifndef RICBOUNDS_PARALLEL_HPP
#define RICBOUNDS_PARALLEL_HPP

// Static block partitioning over std::thread. Results never depend on the
// worker count: each index is processed exactly once and callers reduce
// with order-independent operations or write to per-index slots.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace ricbounds {

/// Worker count: RIC_BOUNDS_THREADS when set to a positive integer,
/// otherwise hardware_concurrency (at least 1).
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("RIC_BOUNDS_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(std::min<long>(v, 1024));
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls body(worker, begin, end) on disjoint contiguous blocks covering
/// [0, count). The first exception thrown by any worker is rethrown.
template <class Body>
void parallel_blocks(std::size_t count, unsigned threads, Body&& body) {
  if (count == 0) return;
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, count);
  if (workers == 1) {
    body(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        body(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ricbounds

#endif  // RICBOUNDS_PARALLEL_HPP
