#include "hilbert_forms/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hilbert_forms/errors.hpp"

namespace hforms::special {
namespace {

constexpr std::int64_t kMaxDirectTerms = 1'000'000;

// |B_{2k+2}| / (2k+2)! for k = 1, 2.
constexpr double kOmittedCoefficient[3] = {0.0, 1.0 / 720.0, 1.0 / 30240.0};

// max |B_{2k+1}(x)| on [0, 1] divided by (2k+1)!, rounded up.
constexpr double kPeriodicBernoulliSup[3] = {0.0, 0.0482 / 6.0,
                                             0.0245 / 120.0};

void require_order(int k) {
  if (k != 1 && k != 2) {
    throw UnsupportedDegree("Euler-Maclaurin order must be 1 or 2, got " +
                            std::to_string(k));
  }
}

// j-th derivative of x^p evaluated at x.
double monomial_derivative(double p, int j, double x) {
  const double c = falling_factorial(p, j);
  if (c == 0.0) return 0.0;
  return c * std::pow(x, p - j);
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Sign of the remainder integral for f(x) = x^p with k correction terms,
// from the sign of the integral of g * B_{2k+1} over each unit interval
// where g is +-f^(2k+1), positive and decreasing.
RemainderSign lemma_sign(double p, int k) {
  const int d = 2 * k + 1;
  const double c = falling_factorial(p, d);
  // f^(d) vanishes identically or is constant; B_{2k+1} integrates to zero
  // over every full period.
  if (c == 0.0 || p == d) return RemainderSign::zero;
  // |f^(d)| grows; the lemma does not apply.
  if (p > d) return RemainderSign::unknown;
  const int decreasing_positive_sign = (k % 2 == 1) ? 1 : -1;
  const int s = c > 0.0 ? decreasing_positive_sign : -decreasing_positive_sign;
  return s > 0 ? RemainderSign::positive : RemainderSign::negative;
}

// Absolute remainder budget for corrections up to order k over [lo, hi]
// (hi may be +inf). Classical bound: the first omitted term, valid when
// f^(2k+2) and f^(2k+4) share their sign. Otherwise fall back to
// sup|B_{2k+1}| / (2k+1)! * |f^(2k)(hi) - f^(2k)(lo)|.
double remainder_budget(double p, int k, double lo, double hi) {
  const int d = 2 * k + 1;
  auto at = [&](int j, double x) {
    if (std::isinf(x)) return 0.0;  // every derivative used here decays
    return monomial_derivative(p, j, x);
  };
  const bool same_sign_even_derivatives =
      (p - (d + 1)) * (p - (d + 2)) >= 0.0;
  if (same_sign_even_derivatives) {
    return kOmittedCoefficient[k] * std::abs(at(d, hi) - at(d, lo));
  }
  return kPeriodicBernoulliSup[k] * std::abs(at(d - 1, hi) - at(d - 1, lo));
}

double composite_simpson(auto&& f, double a, double b, int panels) {
  const int intervals = 2 * panels;
  const double h = (b - a) / intervals;
  CompensatedSum acc;
  acc.add(f(a));
  acc.add(f(b));
  for (int i = 1; i < intervals; ++i) {
    acc.add((i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h));
  }
  return acc.value() * h / 3.0;
}

}  // namespace

BernoulliDegree::BernoulliDegree(int k) : k_(k) {
  if (k < 0 || k > 5) {
    throw UnsupportedDegree("Bernoulli degree must lie in 0..5, got " +
                            std::to_string(k));
  }
}

std::string_view to_string(RemainderSign sign) noexcept {
  switch (sign) {
    case RemainderSign::negative: return "negative";
    case RemainderSign::positive: return "positive";
    case RemainderSign::zero: return "zero";
    case RemainderSign::unknown: break;
  }
  return "unknown";
}

void CompensatedSum::add(double term) noexcept {
  const double t = sum_ + term;
  if (std::abs(sum_) >= std::abs(term)) {
    compensation_ += (sum_ - t) + term;
  } else {
    compensation_ += (term - t) + sum_;
  }
  sum_ = t;
}

double bernoulli_poly(BernoulliDegree k, double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("Bernoulli polynomial argument must lie in [0, 1]");
  }
  switch (k.value()) {
    case 0: return 1.0;
    case 1: return x - 0.5;
    case 2: return (x - 1.0) * x + 1.0 / 6.0;
    case 3: return ((x - 1.5) * x + 0.5) * x;
    case 4: return ((x - 2.0) * x + 1.0) * x * x - 1.0 / 30.0;
    default: return (((x - 2.5) * x + 5.0 / 3.0) * x * x - 1.0 / 6.0) * x;
  }
}

double bernoulli_number(int k) {
  if (k == 2) return 1.0 / 6.0;
  if (k == 4) return -1.0 / 30.0;
  throw UnsupportedDegree("only B_2 and B_4 are available, got B_" +
                          std::to_string(k));
}

double falling_factorial(double p, int j) noexcept {
  double r = 1.0;
  for (int i = 0; i < j; ++i) r *= (p - i);
  return r;
}

EMResult em_tail_sum(const PowerSumSpec& spec) {
  const double p = spec.exponent;
  if (!(p < -1.0)) {
    throw DivergenceError("tail sum of n^p diverges for p >= -1");
  }
  if (spec.start < 1) throw PreconditionError("tail sum start must be >= 1");
  require_order(spec.order);

  const double m = static_cast<double>(spec.start);
  EMResult r;
  double value = -std::pow(m, p + 1.0) / (p + 1.0) - 0.5 * std::pow(m, p);
  for (int j = 1; j <= spec.order; ++j) {
    value -= bernoulli_number(2 * j) / factorial(2 * j) *
             monomial_derivative(p, 2 * j - 1, m);
  }
  r.value = value;
  r.remainder_sign = lemma_sign(p, spec.order);
  r.remainder_bound =
      remainder_budget(p, spec.order, m, std::numeric_limits<double>::infinity());
  return r;
}

EMResult em_partial_sum(const PowerSumSpec& spec, std::int64_t m_end) {
  if (spec.start < 1) throw PreconditionError("partial sum start must be >= 1");
  if (m_end < spec.start) {
    throw PreconditionError("partial sum end must not precede its start");
  }
  require_order(spec.order);

  const double p = spec.exponent;
  const double lo = static_cast<double>(spec.start);
  const double hi = static_cast<double>(m_end);
  EMResult r;
  if (m_end == spec.start) {
    r.value = std::pow(lo, p);
    r.remainder_sign = RemainderSign::zero;
    return r;
  }
  const double integral = (p == -1.0)
                              ? std::log(hi / lo)
                              : (std::pow(hi, p + 1.0) - std::pow(lo, p + 1.0)) /
                                    (p + 1.0);
  double value = integral + 0.5 * (std::pow(hi, p) + std::pow(lo, p));
  for (int j = 1; j <= spec.order; ++j) {
    value += bernoulli_number(2 * j) / factorial(2 * j) *
             (monomial_derivative(p, 2 * j - 1, hi) -
              monomial_derivative(p, 2 * j - 1, lo));
  }
  r.value = value;
  r.remainder_sign = lemma_sign(p, spec.order);
  r.remainder_bound = r.remainder_sign == RemainderSign::zero
                          ? 0.0
                          : remainder_budget(p, spec.order, lo, hi);
  return r;
}

double tail_sum(double p, std::int64_t m, double tol) {
  if (!(p < -1.0)) {
    throw DivergenceError("tail sum of n^p diverges for p >= -1");
  }
  if (m < 0) throw PreconditionError("tail sum start must be >= 0");
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");

  // Order-2 budget at cutoff M: |f^(5)(M)| / 30240.
  const double c5 = std::abs(falling_factorial(p, 5)) * kOmittedCoefficient[2];
  const double target = 0.5 * tol;
  auto budget = [&](std::int64_t cutoff) {
    return c5 * std::pow(static_cast<double>(cutoff), p - 5.0);
  };
  const double guess = std::ceil(std::pow(c5 / target, 1.0 / (5.0 - p)));
  std::int64_t cutoff = std::max<std::int64_t>(m, 1);
  if (guess > static_cast<double>(cutoff)) {
    cutoff = guess > 4e18 ? std::numeric_limits<std::int64_t>::max() / 2
                          : static_cast<std::int64_t>(guess);
  }
  while (budget(cutoff) > target) ++cutoff;

  bool capped = false;
  if (cutoff - m > kMaxDirectTerms) {
    cutoff = m + kMaxDirectTerms;
    capped = true;
  }

  CompensatedSum acc;
  for (std::int64_t n = m + 1; n <= cutoff; ++n) {
    acc.add(std::pow(static_cast<double>(n), p));
  }
  acc.add(em_tail_sum({p, cutoff, 2}).value);
  if (capped) {
    throw AccuracyError("tail sum: tolerance not attainable within 10^6 "
                        "direct terms",
                        acc.value());
  }
  return acc.value();
}

double zeta(double s, double tol) {
  if (!(s > 1.0)) throw DomainError("zeta(s) requires real s > 1");
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
  return tail_sum(-s, 0, tol);
}

RemainderSign remainder_sign_check(double g_exponent, int k, double x0) {
  if (!(g_exponent < 0.0)) {
    throw PreconditionError("g(x) = (x0 + x)^e must be decreasing: need e < 0");
  }
  if (!(x0 >= 1.0)) throw PreconditionError("x0 must be >= 1");
  require_order(k);

  const BernoulliDegree degree(2 * k + 1);
  const double integral = composite_simpson(
      [&](double x) {
        return std::pow(x0 + x, g_exponent) * bernoulli_poly(degree, x);
      },
      0.0, 1.0, 1024);
  if (std::abs(integral) < 1e-13) return RemainderSign::unknown;
  return integral > 0.0 ? RemainderSign::positive : RemainderSign::negative;
}

}  // namespace hforms::special
