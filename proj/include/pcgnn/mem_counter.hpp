#pragma once

#include <cstddef>
#include <cstdint>

namespace pcgnn {

/// Thread-local accounting of live scalar elements in matrix storage.
/// Inactive by default; a TransientScope activates it for the current thread
/// and records the peak concurrent element count. Parameter and input buffers
/// allocated before the scope opens are therefore excluded, which is exactly
/// the "transient kernel buffers" quantity the memory claims are about.
struct MemCounter {
  std::int64_t current = 0;
  std::int64_t peak = 0;

  void add(std::int64_t n) {
    current += n;
    if (current > peak) peak = current;
  }
  void sub(std::int64_t n) { current -= n; }
};

namespace detail {
MemCounter*& active_counter();
}

inline void count_alloc(std::size_t elems) {
  if (MemCounter* c = detail::active_counter()) c->add(static_cast<std::int64_t>(elems));
}
inline void count_free(std::size_t elems) {
  if (MemCounter* c = detail::active_counter()) c->sub(static_cast<std::int64_t>(elems));
}

/// RAII activation of the counter on this thread.
class TransientScope {
 public:
  TransientScope();
  ~TransientScope();
  TransientScope(const TransientScope&) = delete;
  TransientScope& operator=(const TransientScope&) = delete;

  std::int64_t peak() const { return counter_.peak; }
  std::int64_t current() const { return counter_.current; }

 private:
  MemCounter counter_;
  MemCounter* previous_;
};

}  // namespace pcgnn
