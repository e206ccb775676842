#include "dtc/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace dtc {

int worker_count() {
  if (const char* env = std::getenv("DTC_WORKERS")) {
    const int n = std::atoi(env);
    if (n < 1) throw std::invalid_argument("DTC_WORKERS must be a positive integer");
    return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const int workers = worker_count();
  if (workers == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next(0);
  std::exception_ptr error;
  std::atomic<bool> failed(false);
  auto body = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t spawn = std::min<std::size_t>(workers, count);
  pool.reserve(spawn);
  for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace dtc
