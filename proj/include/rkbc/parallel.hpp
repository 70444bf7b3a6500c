#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace rkbc {

/// Runs fn(i) for i in [begin, end) on up to `threads` workers. Each index is
/// visited exactly once and work is split into contiguous blocks, so results
/// written per index do not depend on the thread count.
template <class Fn>
void parallel_for(int begin, int end, int threads, Fn&& fn) {
  const int count = end - begin;
  if (count <= 0) return;
  threads = std::clamp(threads, 1, count);
  if (threads == 1) {
    for (int i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads - 1);
  const int block = (count + threads - 1) / threads;
  for (int t = 1; t < threads; ++t) {
    const int lo = begin + t * block;
    const int hi = std::min(end, lo + block);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (int i = lo; i < hi; ++i) fn(i);
    });
  }
  for (int i = begin; i < std::min(end, begin + block); ++i) fn(i);
}

}  // namespace rkbc
