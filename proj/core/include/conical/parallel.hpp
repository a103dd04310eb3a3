#pragma once

#include <cstddef>
#include <functional>
#include <memory>

namespace conical {

/// Fork-join worker pool with static index-range partitioning.
///
/// Work is split into fixed contiguous chunks by worker index, so a given
/// element is always processed by the same arithmetic regardless of the
/// worker count; loops that write disjoint elements produce bit-identical
/// results for any number of workers. Reductions must be done by the caller
/// in a fixed order over the output array.
class ThreadPool {
 public:
  /// n_threads == 0 picks the hardware concurrency.
  explicit ThreadPool(int n_threads = 0);
  ~ThreadPool();

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  int size() const;

  /// Invokes fn(begin, end) on disjoint subranges of [0, n) covering it.
  void for_range(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

  /// Convenience: fn(i) per index.
  void for_each(std::size_t n, const std::function<void(std::size_t)>& fn);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Worker count resolution: explicit argument if > 0, else the CONICAL_THREADS
/// environment variable, else hardware concurrency.
int resolve_thread_count(int requested);

}  // namespace conical
