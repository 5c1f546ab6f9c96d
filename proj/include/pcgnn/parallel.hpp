#pragma once

#include <cstdint>
#include <functional>

#include "pcgnn/common.hpp"

namespace pcgnn {

/// Worker count used by parallel_for: PCGNN_THREADS if set, else the machine
/// core count.
int worker_count();

/// Runs fn(begin..end) split into contiguous chunks across workers. Chunks are
/// disjoint, so any kernel whose writes are row-disjoint produces results that
/// do not depend on the worker count. Nested calls run serially.
void parallel_for(index_t begin, index_t end,
                  const std::function<void(index_t, index_t)>& fn);

/// Forces serial execution on this thread while alive (used by timed bench
/// regions, which must run strictly single-worker).
class SerialRegion {
 public:
  SerialRegion();
  ~SerialRegion();
  SerialRegion(const SerialRegion&) = delete;
  SerialRegion& operator=(const SerialRegion&) = delete;
};

}  // namespace pcgnn
