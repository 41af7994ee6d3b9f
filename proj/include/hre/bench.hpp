#pragma once

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "hre/wordbreak.hpp"

namespace hre {

/// Text a^n (one symbol) with dictionary words a^(P*t), t = 1, 2, ..., until
/// the total size reaches about m. Breakable prefixes are exactly the
/// multiples of P, so most marked-ancestor walks fail, while every window
/// holds many occurrences. Answer is true iff P divides n.
WordBreakInstance scaling_instance(std::size_t n, std::size_t m, std::size_t period);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Median wall time of `reps` runs of f, in seconds.
template <class F>
double median_seconds(std::size_t reps, F&& f) {
  std::vector<double> t;
  for (std::size_t r = 0; r < reps; ++r) {
    auto a = std::chrono::steady_clock::now();
    f();
    auto b = std::chrono::steady_clock::now();
    t.push_back(std::chrono::duration<double>(b - a).count());
  }
  std::sort(t.begin(), t.end());
  return t.empty() ? 0.0 : t[t.size() / 2];
}

}  // namespace hre
