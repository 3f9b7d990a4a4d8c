#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>

namespace ccvms::numeric {

inline bool approx(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// Deterministic double stream. uniform_real_distribution is implementation
// defined, so doubles are derived from raw engine output to keep reports
// byte-identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double unit() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  std::uint64_t next_u64() { return engine_(); }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

// Shortest-ish stable rendering for report text; %.12g never prints the
// negative-zero artifacts the metric formulas can produce.
inline std::string num_to_string(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace ccvms::numeric
