#pragma once
// Deterministic data-parallel helper. Work is split into contiguous chunks
// whose boundaries depend only on (total, threads); each chunk writes its own
// accumulator and callers merge in chunk order, so results are independent of
// scheduling and of the actual thread count.

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace veronese {

inline unsigned effective_threads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// fn(chunk_index, begin, end) over [0, total).
inline void parallel_chunks(uint64_t total, unsigned threads,
                            const std::function<void(unsigned, uint64_t, uint64_t)>& fn) {
  threads = effective_threads(threads);
  if (total == 0) return;
  uint64_t nchunks = threads;
  if (nchunks > total) nchunks = total;
  auto bound = [&](uint64_t c) { return total * c / nchunks; };
  if (nchunks == 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nchunks);
  for (uint64_t c = 0; c < nchunks; ++c)
    pool.emplace_back([&, c] { fn(static_cast<unsigned>(c), bound(c), bound(c + 1)); });
  for (auto& t : pool) t.join();
}

}  // namespace veronese
