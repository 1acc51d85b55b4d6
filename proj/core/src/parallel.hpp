#pragma once

#include <thread>
#include <vector>

namespace qice::detail {

// Runs fn(i) for i in [0, n) on up to `jobs` threads, chunked by index.
// Results must be written to disjoint, preallocated slots so the outcome is
// independent of the thread count.
template <class F>
void parallel_for(size_t n, int jobs, F&& fn) {
  if (jobs < 1) jobs = 1;
  if (jobs == 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  size_t workers = std::min<size_t>(jobs, n);
  std::vector<std::thread> threads;
  for (size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (std::thread& t : threads) t.join();
}

}  // namespace qice::detail
