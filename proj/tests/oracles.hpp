#pragma once

// Reference computations for the tests. None of them call into the library:
// sums are taken term by term and closed by the midpoint rule,
//   sum_{n>N} f(n) ~ integral_{N+1/2}^inf f + f'(N+1/2)/24,
// whose error is of order f'''(N)/N^2 and negligible for the N used here.

#include <cmath>
#include <cstdint>
#include <functional>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

struct Kahan {
  double sum = 0.0;
  double c = 0.0;
  void add(double x) {
    const double t = sum + x;
    c += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + c; }
};

// sum of n^p over n > m, p < -1
inline double power_tail(double p, std::int64_t m, std::int64_t terms = 200000) {
  const std::int64_t top = m + terms;
  Kahan acc;
  const double h = static_cast<double>(top) + 0.5;
  acc.add(std::pow(h, p + 1.0) / (-p - 1.0));
  acc.add(p * std::pow(h, p - 1.0) / 24.0);
  for (std::int64_t n = top; n > m; --n) acc.add(std::pow(static_cast<double>(n), p));
  return acc.value();
}

inline double zeta(double s) { return power_tail(-s, 0); }

// sum of n^p for n = 1 .. m
inline double power_head(double p, std::int64_t m) {
  Kahan acc;
  for (std::int64_t n = 1; n <= m; ++n) acc.add(std::pow(static_cast<double>(n), p));
  return acc.value();
}

// Composite Simpson with `panels` (even) subintervals.
inline double simpson(const std::function<double(double)>& f, double a, double b,
                      int panels) {
  const double h = (b - a) / panels;
  Kahan acc;
  acc.add(f(a));
  acc.add(f(b));
  for (int i = 1; i < panels; ++i) acc.add((i % 2 ? 4.0 : 2.0) * f(a + i * h));
  return acc.value() * h / 3.0;
}

inline double kernel(double alpha, double x, double y) {
  return std::pow(x * y, alpha - 0.5) / std::pow(std::max(x, y), 2.0 * alpha);
}

}  // namespace oracle
