#pragma once

#include <thread>
#include <vector>

namespace loopkit::detail {

inline int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Runs fn(chunk, begin, end) over contiguous chunks of [0, total); chunk results
// must be merged by chunk index to stay order-independent.
template <class Fn>
void parallel_chunks(long total, int workers, Fn&& fn) {
  const int k = std::min<long>(resolve_workers(workers), total > 0 ? total : 1);
  if (k <= 1) {
    fn(0, 0L, total);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(k);
  for (int c = 0; c < k; ++c) {
    const long lo = total * c / k;
    const long hi = total * (c + 1) / k;
    threads.emplace_back([&fn, c, lo, hi] { fn(c, lo, hi); });
  }
  for (auto& t : threads) t.join();
}

}  // namespace loopkit::detail
