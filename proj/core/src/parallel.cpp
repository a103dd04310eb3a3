#include "conical/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace conical {

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CONICAL_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? int(hw) : 1;
}

struct ThreadPool::Impl {
  explicit Impl(int n) : n_workers(n) {
    for (int t = 1; t < n_workers; ++t) {
      workers.emplace_back([this, t] { worker_loop(t); });
    }
  }

  ~Impl() {
    {
      std::unique_lock lk(mtx);
      stopping = true;
      ++generation;
    }
    cv.notify_all();
    for (auto& w : workers) w.join();
  }

  void run(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
    if (n == 0) return;
    if (n_workers == 1 || n < 2) {
      fn(0, n);
      return;
    }
    {
      std::unique_lock lk(mtx);
      job = &fn;
      job_n = n;
      pending = n_workers - 1;
      ++generation;
    }
    cv.notify_all();
    run_chunk(0);
    std::unique_lock lk(mtx);
    done_cv.wait(lk, [this] { return pending == 0; });
    job = nullptr;
  }

  void run_chunk(int t) const {
    const std::size_t per = (job_n + std::size_t(n_workers) - 1) / std::size_t(n_workers);
    const std::size_t b = std::min(job_n, per * std::size_t(t));
    const std::size_t e = std::min(job_n, b + per);
    if (b < e) (*job)(b, e);
  }

  void worker_loop(int t) {
    std::uint64_t seen = 0;
    for (;;) {
      {
        std::unique_lock lk(mtx);
        cv.wait(lk, [&] { return generation != seen; });
        seen = generation;
        if (stopping) return;
      }
      run_chunk(t);
      {
        std::unique_lock lk(mtx);
        if (--pending == 0) done_cv.notify_one();
      }
    }
  }

  int n_workers;
  std::vector<std::thread> workers;
  std::mutex mtx;
  std::condition_variable cv, done_cv;
  std::uint64_t generation = 0;
  bool stopping = false;
  const std::function<void(std::size_t, std::size_t)>* job = nullptr;
  std::size_t job_n = 0;
  int pending = 0;
};

ThreadPool::ThreadPool(int n_threads) : impl_(std::make_unique<Impl>(resolve_thread_count(n_threads))) {}

ThreadPool::~ThreadPool() = default;

int ThreadPool::size() const { return impl_->n_workers; }

void ThreadPool::for_range(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
  impl_->run(n, fn);
}

void ThreadPool::for_each(std::size_t n, const std::function<void(std::size_t)>& fn) {
  impl_->run(n, [&fn](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) fn(i);
  });
}

}  // namespace conical
