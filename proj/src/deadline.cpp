#include "fusionlab/deadline.hpp"

#include "fusionlab/errors.hpp"

namespace fusionlab {

namespace {
thread_local bool active = false;
thread_local std::chrono::steady_clock::time_point limit;
thread_local unsigned ticks = 0;
}  // namespace

ScopedDeadline::ScopedDeadline(std::chrono::milliseconds budget)
    : had_previous_(active), previous_(limit) {
  auto proposed = std::chrono::steady_clock::now() + budget;
  if (!active || proposed < limit) limit = proposed;
  active = true;
}

ScopedDeadline::~ScopedDeadline() {
  active = had_previous_;
  limit = previous_;
}

void check_deadline() {
  if (!active) return;
  // Reading the clock on every call is measurable in the hot loops.
  if ((++ticks & 0xFFU) != 0) return;
  if (std::chrono::steady_clock::now() > limit) throw CapExceeded("per-group time budget exhausted");
}

}  // namespace fusionlab
