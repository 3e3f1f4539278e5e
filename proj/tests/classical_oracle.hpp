#pragma once

// Independent oracle for the minimal mutual-information power: bisection on
// f(n) = (y/x)^n + (z/x)^n - 1 over real n, then the ceiling of the crossing.

#include <cmath>
#include <optional>

namespace qdeficit::testing {

inline std::optional<int> bisection_power(double x, double y, double z) {
  if (!(x > std::max(y, z))) return std::nullopt;
  const auto f = [&](double n) { return std::pow(y / x, n) + std::pow(z / x, n) - 1.0; };
  if (f(1.0) <= 0.0) return 1;
  double lo = 1.0, hi = 2.0;
  while (f(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e9) return std::nullopt;
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return static_cast<int>(std::ceil(hi - 1e-12));
}

}  // namespace qdeficit::testing
