#pragma once

// Index-space parallel_for.  Work items write to disjoint slots, so the
// result is identical for any worker count.  FRACWAVE_WORKERS overrides the
// thread count (the only environment knob the library reads).

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace fracwave::detail {

inline unsigned worker_count() {
  if (const char* env = std::getenv("FRACWAVE_WORKERS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1u : hw;
}

template <class Body>
void parallel_for(std::size_t begin, std::size_t end, const Body& body) {
  const std::size_t count = end > begin ? end - begin : 0;
  const unsigned workers = std::min<std::size_t>(worker_count(), count);
  if (workers <= 1 || count < 2) {
    for (std::size_t i = begin; i < end; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = begin + w * chunk;
    const std::size_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace fracwave::detail
