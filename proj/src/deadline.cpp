#include "sdw/deadline.hpp"

namespace sdw {

namespace {
thread_local bool g_active = false;
thread_local Deadline::Clock::time_point g_until;
thread_local unsigned g_counter = 0;
}  // namespace

Deadline::Deadline(double seconds) : previous_(g_until), previous_active_(g_active) {
  if (seconds <= 0) return;
  auto until = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(seconds));
  if (!g_active || until < g_until) g_until = until;
  g_active = true;
}

Deadline::~Deadline() {
  g_until = previous_;
  g_active = previous_active_;
}

void Deadline::check() {
  if (!g_active) return;
  if ((++g_counter & 0xff) != 0) return;
  if (Clock::now() > g_until) throw TimeoutError();
}

}  // namespace sdw
