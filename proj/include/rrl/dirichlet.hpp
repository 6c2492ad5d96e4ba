// dirichlet.hpp — Dirichlet kernel D_m(x): evaluation, derivative, zeros, minima.
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace rrl::dirichlet {

// First positive root of tan(x) = x, used to locate the kernel's global minimum.
inline constexpr double kUpsilon = 4.493409457909064;

// Switch from the sin-ratio form to the cosine-sum form when |sin(x/2)| falls
// below this. Wide enough that the ratio form never amplifies argument rounding
// past ~1e-12; the O(m) fallback is only hit for x within ~2e-3 of a multiple
// of 2*pi.
inline constexpr double kSingularGuard = 1e-3;

inline double upsilon() {
  static const double u = [] {
    if (std::fabs(std::tan(kUpsilon) - kUpsilon) > 1e-12)
      throw std::logic_error("dirichlet: upsilon constant fails tan(x) == x self-check");
    return kUpsilon;
  }();
  return u;
}

inline void require_order(int m) {
  if (m < 0) throw std::invalid_argument("dirichlet: order m must be non-negative");
}

// D_m(x) = 1/2 + sum_{k=1}^{m} cos(kx). Exact (up to one rounding) at x = 0.
inline double eval_cos_sum(int m, double x) {
  require_order(m);
  double acc = 0.5;
  for (int k = 1; k <= m; ++k) acc += std::cos(k * x);
  return acc;
}

// D_m(x) = sin((m+1/2)x) / (2 sin(x/2)) away from multiples of 2*pi.
inline double eval(int m, double x) {
  require_order(m);
  const double s = std::sin(0.5 * x);
  if (std::fabs(s) <= kSingularGuard) return eval_cos_sum(m, x);
  return std::sin((m + 0.5) * x) / (2.0 * s);
}

// D_m'(x) = -sum_{k=1}^{m} k sin(kx).
inline double derivative(int m, double x) {
  require_order(m);
  double acc = 0.0;
  for (int k = 1; k <= m; ++k) acc += k * std::sin(k * x);
  return -acc;
}

// The 2m zeros in (0, 2*pi): x_k = 2k*pi/(2m+1), k = 1..2m.
inline std::vector<double> zeros_in_period(int m) {
  require_order(m);
  std::vector<double> z;
  z.reserve(2 * m);
  for (int k = 1; k <= 2 * m; ++k)
    z.push_back(2.0 * k * std::numbers::pi / (2 * m + 1));
  return z;
}

// Location of the global minimum on (0, 2*pi), approximated by 2*upsilon/(2m+1);
// always inside the first interior zero gap (first two zeros bracket it).
inline double global_min_location_approx(int m) {
  if (m < 1) throw std::invalid_argument("dirichlet: global minimum needs m >= 1");
  return 2.0 * upsilon() / (2 * m + 1);
}

}  // namespace rrl::dirichlet
