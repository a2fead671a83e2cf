#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace mzi::detail {

// Calls fn(i) for i in [0, count) on up to `jobs` threads. Work items are
// claimed dynamically; callers write results into per-index slots.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  std::vector<std::jthread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
}

}  // namespace mzi::detail
