#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hss {

// Default worker count: the HSS_STAB_WORKERS environment variable if set,
// otherwise 1 (sweeps are deterministic regardless, so parallelism is purely
// a speed knob).
inline int default_workers() {
  if (const char* env = std::getenv("HSS_STAB_WORKERS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

// Runs fn(chunk_index) for chunk_index in [0, chunks), distributing chunks
// over `workers` threads, and returns the per-chunk results indexed by chunk.
// Callers merge the results in index order, so the reduction is identical to
// a serial run whatever the worker count.
template <typename Result, typename Fn>
std::vector<Result> run_chunked(std::size_t chunks, int workers, Fn&& fn) {
  std::vector<Result> results(chunks);
  if (chunks == 0) return results;
  workers = std::max(1, workers);
  if (workers == 1 || chunks == 1) {
    for (std::size_t c = 0; c < chunks; ++c) results[c] = fn(c);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      results[c] = fn(c);
    }
  };
  std::vector<std::thread> pool;
  const std::size_t nthreads = std::min<std::size_t>(static_cast<std::size_t>(workers), chunks);
  pool.reserve(nthreads);
  for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace hss
