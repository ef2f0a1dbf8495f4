#pragma once

#include <chrono>
#include <stdexcept>

namespace sdw {

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("time limit exceeded") {}
};

/// Per-thread cooperative deadline polled by the long-running kernels.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  /// Installs a deadline for the current thread; the previous one is restored on destruction.
  explicit Deadline(double seconds);
  ~Deadline();
  Deadline(const Deadline&) = delete;
  Deadline& operator=(const Deadline&) = delete;

  static void check();

 private:
  Clock::time_point previous_;
  bool previous_active_;
};

}  // namespace sdw
