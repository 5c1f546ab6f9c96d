#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pcgnn {

/// Library-wide error type. Every recoverable failure (bad input, bad file,
/// shape mismatch, divergence) is reported by throwing this.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void check(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

using index_t = std::int64_t;

}  // namespace pcgnn
