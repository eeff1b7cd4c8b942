#include "caryb/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace caryb {

namespace {
std::atomic<int> g_threads{0};
}

void set_thread_count(int n) { g_threads.store(n < 0 ? 0 : n); }

int thread_count() {
  int n = g_threads.load();
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(std::int64_t total, const std::function<void(std::int64_t, std::int64_t)>& fn) {
  const int workers = std::min<std::int64_t>(thread_count(), std::max<std::int64_t>(total, 1));
  if (workers <= 1 || total < 1024) {
    if (total > 0) fn(0, total);
    return;
  }
  // fixed-size blocks claimed from an atomic counter: work stays balanced,
  // callers make results deterministic themselves
  const std::int64_t block = std::max<std::int64_t>(256, total / (workers * 16));
  std::atomic<std::int64_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      try {
        for (;;) {
          std::int64_t begin = next.fetch_add(block);
          if (begin >= total) return;
          fn(begin, std::min(begin + block, total));
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace caryb
