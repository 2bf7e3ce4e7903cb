#ifndef CSMABOUND_PARALLEL_HPP_
#define CSMABOUND_PARALLEL_HPP_

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace csmabound {

// Runs fn(0..count-1) across up to n_threads workers (hardware concurrency
// when 0). Tasks must write only to their own index slot; results are then
// independent of scheduling order.
inline void parallel_for(std::size_t count,
                         const std::function<void(std::size_t)>& fn,
                         unsigned n_threads = 0) {
  if (count == 0) return;
  unsigned workers = n_threads != 0 ? n_threads
                                    : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers > count) workers = static_cast<unsigned>(count);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace csmabound

#endif  // CSMABOUND_PARALLEL_HPP_
