#include "pcgnn/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace pcgnn {

namespace {
thread_local int t_serial_depth = 0;

int detect_workers() {
  if (const char* env = std::getenv("PCGNN_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}
}  // namespace

int worker_count() {
  static int n = detect_workers();
  return n;
}

void parallel_for(index_t begin, index_t end,
                  const std::function<void(index_t, index_t)>& fn) {
  index_t total = end - begin;
  if (total <= 0) return;
  int workers = worker_count();
  if (t_serial_depth > 0 || workers <= 1 || total < 2) {
    fn(begin, end);
    return;
  }
  index_t chunks = std::min<index_t>(workers, total);
  index_t step = (total + chunks - 1) / chunks;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(chunks));
  for (index_t c = 0; c < chunks; ++c) {
    index_t lo = begin + c * step;
    index_t hi = std::min(end, lo + step);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] {
      ++t_serial_depth;  // no nested parallelism
      fn(lo, hi);
      --t_serial_depth;
    });
  }
  for (auto& t : pool) t.join();
}

SerialRegion::SerialRegion() { ++t_serial_depth; }
SerialRegion::~SerialRegion() { --t_serial_depth; }

}  // namespace pcgnn
