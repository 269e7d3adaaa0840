#pragma once

#include <chrono>

namespace fusionlab {

// Per-thread cooperative deadline. Long-running loops call check_deadline();
// once the active deadline has passed it throws CapExceeded.
class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::chrono::milliseconds budget);
  ~ScopedDeadline();
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  bool had_previous_;
  std::chrono::steady_clock::time_point previous_;
};

void check_deadline();

}  // namespace fusionlab
