#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace strongpow {

// Raised by brute-force oracles and exact routines whose cost grows
// exponentially (or steeply polynomially) in the input size.
class SizeGuardError : public std::length_error {
 public:
  SizeGuardError(std::string operation, std::size_t size, std::size_t limit)
      : std::length_error(operation + ": input of size " +
                          std::to_string(size) + " exceeds limit " +
                          std::to_string(limit)),
        operation_(std::move(operation)),
        size_(size),
        limit_(limit) {}

  const std::string& operation() const noexcept { return operation_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string operation_;
  std::size_t size_;
  std::size_t limit_;
};

inline void check_size_guard(const char* operation, std::size_t size,
                             std::size_t limit) {
  if (size > limit) throw SizeGuardError(operation, size, limit);
}

}  // namespace strongpow
