#pragma once

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace lowdiam {

// Flat fork-join pool. parallel_for hands out [lo, hi) chunks from a shared
// cursor; the calling thread works alongside the pool and returns only after
// every chunk is done, so chunk bodies from one call never overlap the next.
// Not reentrant: do not call parallel_for from inside a body.
class ThreadPool {
 public:
  explicit ThreadPool(int threads) : total_(threads < 1 ? 1 : threads) {
    workers_.reserve(total_ - 1);
    for (int t = 0; t + 1 < total_; ++t)
      workers_.emplace_back([this] { worker_loop(); });
  }

  ~ThreadPool() {
    {
      std::lock_guard<std::mutex> lock(mu_);
      stop_ = true;
    }
    wake_cv_.notify_all();
    for (auto& w : workers_) w.join();
  }

  ThreadPool(const ThreadPool&) = delete;
  ThreadPool& operator=(const ThreadPool&) = delete;

  int threads() const { return total_; }

  static int hardware_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }

  void parallel_for(std::size_t n, std::size_t grain,
                    const std::function<void(std::size_t, std::size_t)>& body) {
    if (n == 0) return;
    if (grain == 0) grain = std::max<std::size_t>(1, n / (8 * static_cast<std::size_t>(total_)));
    if (total_ == 1 || n <= grain) {
      body(0, n);
      return;
    }
    {
      std::lock_guard<std::mutex> lock(mu_);
      body_ = &body;
      n_ = n;
      grain_ = grain;
      cursor_.store(0, std::memory_order_relaxed);
      pending_.store(total_ - 1, std::memory_order_relaxed);
      ++epoch_;
    }
    wake_cv_.notify_all();
    run_chunks(body, n, grain);
    std::unique_lock<std::mutex> lock(mu_);
    done_cv_.wait(lock, [this] { return pending_.load(std::memory_order_acquire) == 0; });
  }

 private:
  void run_chunks(const std::function<void(std::size_t, std::size_t)>& body, std::size_t n,
                  std::size_t grain) {
    for (;;) {
      std::size_t lo = cursor_.fetch_add(grain, std::memory_order_relaxed);
      if (lo >= n) break;
      body(lo, std::min(lo + grain, n));
    }
  }

  void worker_loop() {
    std::uint64_t seen = 0;
    for (;;) {
      const std::function<void(std::size_t, std::size_t)>* body;
      std::size_t n, grain;
      {
        std::unique_lock<std::mutex> lock(mu_);
        wake_cv_.wait(lock, [&] { return stop_ || epoch_ != seen; });
        if (stop_) return;
        seen = epoch_;
        body = body_;
        n = n_;
        grain = grain_;
      }
      run_chunks(*body, n, grain);
      if (pending_.fetch_sub(1, std::memory_order_acq_rel) == 1) {
        std::lock_guard<std::mutex> lock(mu_);
        done_cv_.notify_one();
      }
    }
  }

  const int total_;
  std::vector<std::thread> workers_;
  std::mutex mu_;
  std::condition_variable wake_cv_, done_cv_;
  const std::function<void(std::size_t, std::size_t)>* body_ = nullptr;
  std::size_t n_ = 0, grain_ = 0;
  std::uint64_t epoch_ = 0;
  bool stop_ = false;
  std::atomic<std::size_t> cursor_{0};
  std::atomic<int> pending_{0};
};

}  // namespace lowdiam
