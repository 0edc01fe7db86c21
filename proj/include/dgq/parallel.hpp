#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace dgq {

// Number of worker threads: DGQ_THREADS if set (>= 1), else hardware concurrency.
unsigned worker_count();

// Splits [0, n) into contiguous chunks, one per worker; fn(lo, hi, worker).
// Exceptions thrown by a worker are rethrown on the calling thread.
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t, unsigned)>& fn);

// Runs fn(i, out) for every i and concatenates each worker's output in index order,
// so the result does not depend on the schedule.
template <class T, class F>
std::vector<T> parallel_collect(std::size_t n, F&& fn) {
  std::vector<std::vector<T>> parts(worker_count());
  parallel_chunks(n, [&](std::size_t lo, std::size_t hi, unsigned w) {
    for (std::size_t i = lo; i < hi; ++i) fn(i, parts[w]);
  });
  std::vector<T> out;
  for (auto& p : parts)
    for (auto& x : p) out.push_back(std::move(x));
  return out;
}

}  // namespace dgq
