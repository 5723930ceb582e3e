#include "graspgate/parallel.hpp"

#include <algorithm>
#include <mutex>
#include <thread>
#include <vector>

namespace graspgate {

int effective_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::int64_t n, int threads,
                  const std::function<void(std::int64_t, std::int64_t)>& chunk_fn) {
  if (n <= 0) return;
  int workers = std::min<std::int64_t>(effective_threads(threads), n);
  if (workers <= 1) {
    chunk_fn(0, n);
    return;
  }
  // Even split; the first (n % workers) chunks take one extra index.
  std::int64_t base = n / workers;
  std::int64_t extra = n % workers;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  std::int64_t begin = 0;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w) {
    std::int64_t len = base + (w < extra ? 1 : 0);
    std::int64_t end = begin + len;
    pool.emplace_back([&chunk_fn, begin, end, &first_error, &error_mutex] {
      try {
        chunk_fn(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace graspgate
