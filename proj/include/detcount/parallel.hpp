#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace detcount {

/// Number of worker threads used by the counting routines when callers do
/// not pass one explicitly. Zero means hardware concurrency.
unsigned default_jobs();
void set_default_jobs(unsigned jobs);

/// Evaluates fn(i) for i in [0, n) on up to `jobs` threads with a static
/// contiguous partition. Results are returned in index order, so any
/// reduction over them is independent of thread count and scheduling.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, Fn&& fn) {
  std::vector<T> out(n);
  if (jobs == 0) jobs = default_jobs();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = n * w / workers;
    const std::size_t hi = n * (w + 1) / workers;
    threads.emplace_back([&, lo, hi, w] {
      try {
        for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Splits [lo, hi] into `blocks` contiguous inclusive ranges.
struct Block {
  long long lo;
  long long hi;
};

inline std::vector<Block> split_range(long long lo, long long hi, std::size_t blocks) {
  std::vector<Block> out;
  if (hi < lo) return out;
  const long long len = hi - lo + 1;
  blocks = std::max<std::size_t>(1, std::min<std::size_t>(blocks, static_cast<std::size_t>(len)));
  for (std::size_t b = 0; b < blocks; ++b) {
    const long long s = lo + static_cast<long long>(static_cast<__int128>(len) * b / blocks);
    const long long e = lo + static_cast<long long>(static_cast<__int128>(len) * (b + 1) / blocks) - 1;
    out.push_back({s, e});
  }
  return out;
}

}  // namespace detcount
