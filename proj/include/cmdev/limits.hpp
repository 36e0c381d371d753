#pragma once

namespace cmdev {

inline constexpr int kDefaultDegreeCap = 40;

/// Per-thread safety caps read by the Gröbner engine.
struct Limits {
  int degree_cap = kDefaultDegreeCap;
};

inline Limits& limits() {
  thread_local Limits l;
  return l;
}

/// Overrides the degree cap for the current thread until destruction.
class ScopedDegreeCap {
 public:
  explicit ScopedDegreeCap(int cap) : saved_(limits().degree_cap) { limits().degree_cap = cap; }
  ~ScopedDegreeCap() { limits().degree_cap = saved_; }
  ScopedDegreeCap(const ScopedDegreeCap&) = delete;
  ScopedDegreeCap& operator=(const ScopedDegreeCap&) = delete;

 private:
  int saved_;
};

}  // namespace cmdev
