#include "pcgnn/mem_counter.hpp"

namespace pcgnn {

namespace detail {
MemCounter*& active_counter() {
  thread_local MemCounter* counter = nullptr;
  return counter;
}
}  // namespace detail

TransientScope::TransientScope() : previous_(detail::active_counter()) {
  detail::active_counter() = &counter_;
}

TransientScope::~TransientScope() { detail::active_counter() = previous_; }

}  // namespace pcgnn
