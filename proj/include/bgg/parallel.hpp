#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace bgg {

// Indexed parallel loop; f must only touch its own slot.
template <class F>
void parallel_for(long count, int jobs, F f) {
  if (jobs <= 1 || count <= 1) {
    for (long i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<long> next{0};
  std::vector<std::thread> pool;
  long width = std::min<long>(jobs, count);
  for (long t = 0; t < width; ++t)
    pool.emplace_back([&] {
      for (long i; (i = next.fetch_add(1)) < count;) f(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace bgg
