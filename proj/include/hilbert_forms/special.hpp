#pragma once

// Bernoulli polynomials, real-argument zeta and Euler-Maclaurin summation of
// power sums. Everything here works in binary64 and is free of shared state.

#include <cstdint>
#include <string_view>

namespace hforms::special {

/// Degree of a Bernoulli polynomial. Only 0..5 are tabulated.
class BernoulliDegree {
 public:
  explicit BernoulliDegree(int k);
  int value() const noexcept { return k_; }

 private:
  int k_;
};

enum class RemainderSign { negative, positive, zero, unknown };

std::string_view to_string(RemainderSign sign) noexcept;

/// Result of an Euler-Maclaurin evaluation.
///
/// `value` omits the remainder integral. A negative remainder therefore
/// makes `value` an upper bound for the true sum and a positive one makes it
/// a lower bound. `remainder_bound` is an absolute error budget for `value`.
struct EMResult {
  double value = 0.0;
  double remainder_bound = 0.0;
  RemainderSign remainder_sign = RemainderSign::unknown;
};

/// The monomial f(x) = x^exponent summed from `start`, with Euler-Maclaurin
/// corrections up to B_{2*order}.
struct PowerSumSpec {
  double exponent = -2.0;
  std::int64_t start = 1;
  int order = 2;
};

/// Neumaier-compensated running sum. Terms are accumulated in call order.
class CompensatedSum {
 public:
  void add(double term) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

double bernoulli_poly(BernoulliDegree k, double x);

/// B_2 = 1/6 and B_4 = -1/30; other indices throw UnsupportedDegree.
double bernoulli_number(int k);

/// p (p-1) ... (p-j+1), the coefficient of x^(p-j) in the j-th derivative
/// of x^p.
double falling_factorial(double p, int j) noexcept;

/// Riemann zeta for real s > 1 with absolute error at most `tol`.
///
/// Sums n^-s directly up to a cutoff M and closes with the order-2
/// Euler-Maclaurin tail, M being the smallest cutoff whose remainder budget
/// is below tol/2. Throws AccuracyError if M would exceed 10^6.
double zeta(double s, double tol = 1e-12);

/// Sum of n^p over n > m (m >= 0, p < -1) with absolute error at most `tol`,
/// using the same direct-then-Euler-Maclaurin split as zeta().
double tail_sum(double p, std::int64_t m, double tol = 1e-12);

/// Sum of n^p over n > spec.start via the Euler-Maclaurin formula at
/// spec.start. Requires p < -1 and order in {1, 2}.
EMResult em_tail_sum(const PowerSumSpec& spec);

/// Sum of n^p for spec.start <= n <= m_end via the two-sided
/// Euler-Maclaurin formula.
EMResult em_partial_sum(const PowerSumSpec& spec, std::int64_t m_end);

/// Sign of the integral of (x0 + x)^g_exponent * B_{2k+1}(x) over [0, 1],
/// by composite Simpson with 1024 panels. Magnitudes below 1e-13 report
/// `unknown`.
RemainderSign remainder_sign_check(double g_exponent, int k, double x0);

}  // namespace hforms::special
