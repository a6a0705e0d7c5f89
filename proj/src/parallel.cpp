#include "logitfield/parallel.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

namespace logitfield {

namespace {

std::atomic<int> g_default_threads{0};

// Persistent worker pool. Work arrives as a fixed list of disjoint index
// ranges; workers (and the calling thread) pull ranges until none remain.
// Outputs only depend on the ranges, so any pull order gives identical bits.
class Pool {
 public:
  static Pool& instance() {
    static Pool pool;
    return pool;
  }

  void run(const std::vector<std::pair<std::size_t, std::size_t>>& chunks,
           const std::function<void(std::size_t, std::size_t)>& fn) {
    std::unique_lock<std::mutex> gate(run_mutex_);
    ensure_workers(chunks.size() - 1);
    {
      std::lock_guard<std::mutex> lk(m_);
      chunks_ = &chunks;
      fn_ = &fn;
      next_.store(0, std::memory_order_relaxed);
      pending_.store(static_cast<int>(chunks.size()), std::memory_order_relaxed);
      ++epoch_;
    }
    cv_task_.notify_all();
    work_loop();  // caller participates
    std::unique_lock<std::mutex> lk(m_);
    cv_done_.wait(lk, [&] { return pending_.load(std::memory_order_acquire) == 0; });
    chunks_ = nullptr;
    fn_ = nullptr;
  }

 private:
  Pool() = default;
  ~Pool() {
    {
      std::lock_guard<std::mutex> lk(m_);
      stop_ = true;
      ++epoch_;
    }
    cv_task_.notify_all();
    for (auto& w : workers_) w.join();
  }

  void ensure_workers(std::size_t want) {
    while (workers_.size() < want) {
      workers_.emplace_back([this] {
        std::uint64_t seen = 0;
        for (;;) {
          {
            std::unique_lock<std::mutex> lk(m_);
            cv_task_.wait(lk, [&] { return epoch_ != seen || stop_; });
            if (stop_) return;
            seen = epoch_;
          }
          work_loop();
        }
      });
    }
  }

  void work_loop() {
    const auto* chunks = chunks_;
    const auto* fn = fn_;
    if (!chunks || !fn) return;
    for (;;) {
      std::size_t idx = next_.fetch_add(1, std::memory_order_relaxed);
      if (idx >= chunks->size()) break;
      (*fn)((*chunks)[idx].first, (*chunks)[idx].second);
      if (pending_.fetch_sub(1, std::memory_order_acq_rel) == 1) {
        std::lock_guard<std::mutex> lk(m_);
        cv_done_.notify_all();
      }
    }
  }

  std::mutex run_mutex_;
  std::mutex m_;
  std::condition_variable cv_task_, cv_done_;
  std::vector<std::thread> workers_;
  const std::vector<std::pair<std::size_t, std::size_t>>* chunks_ = nullptr;
  const std::function<void(std::size_t, std::size_t)>* fn_ = nullptr;
  std::atomic<std::size_t> next_{0};
  std::atomic<int> pending_{0};
  std::uint64_t epoch_ = 0;
  bool stop_ = false;
};

}  // namespace

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LOGITFIELD_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void set_default_threads(int n) { g_default_threads.store(n > 0 ? n : 0); }

int default_threads() { return resolve_threads(g_default_threads.load()); }

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  std::size_t workers = static_cast<std::size_t>(threads > 0 ? threads : 1);
  if (workers > n) workers = n;
  if (workers == 1) {
    fn(0, n);
    return;
  }
  std::vector<std::pair<std::size_t, std::size_t>> chunks;
  chunks.reserve(workers);
  std::size_t chunk = n / workers, rem = n % workers, begin = 0;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t end = begin + chunk + (w < rem ? 1 : 0);
    chunks.emplace_back(begin, end);
    begin = end;
  }
  Pool::instance().run(chunks, fn);
}

}  // namespace logitfield
