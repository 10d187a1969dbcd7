#pragma once

// Majorant sequence, closed-form Euler-Maclaurin estimates and the assembled
// lower/upper bound pair for ||B_alpha||, plus the scalar composition
// operator bounds derived from it.

#include <cstdint>
#include <optional>
#include <string_view>

#include "hilbert_forms/kernel.hpp"

namespace hforms::bounds {

enum class LowerMethod { continuous_limit, point_evaluation, improved, rayleigh };
enum class UpperMethod { cauchy_schwarz_sup };

std::string_view to_string(LowerMethod m) noexcept;
std::string_view to_string(UpperMethod m) noexcept;

struct BoundReport {
  AlphaParam alpha;
  double lower;
  double upper;
  bool exact;  // alpha <= alpha0, both bounds equal 2/alpha
  LowerMethod lower_method;
  UpperMethod upper_method;
};

/// Re(w) for w = phi(+inf); must exceed 1/2.
class CompositionQuery {
 public:
  explicit CompositionQuery(double re_w);
  double re_w() const noexcept { return re_w_; }
  AlphaParam alpha() const { return AlphaParam(re_w_ - 0.5); }

 private:
  double re_w_;
};

struct CompositionBounds {
  double lower;  // sqrt(zeta(2 Re w)), point evaluation
  double upper;  // sqrt of the upper bound for ||B_alpha||
  bool sharp;    // alpha <= alpha0: upper is the attained supremum
};

struct DiscBounds {
  double lower;
  double upper;
};

struct SupResult {
  double sup;
  std::optional<std::int64_t> argmax;  // empty: the m -> inf limit 2/alpha
  bool at_limit() const noexcept { return !argmax.has_value(); }
};

enum class Lemma4 { tail_upper, zeta_lower, partial_upper_12, partial_upper_23 };

struct RestatedCheck {
  bool holds;          // lhs <= rhs up to rounding
  double lhs;          // sqrt(upper(alpha_r))
  double rhs;          // sqrt(upper(alpha)) * disc upper bound
  double zeta_ratio;   // zeta(1 + alpha_r) / zeta(1 + 2 alpha)
  double disc_factor;  // (1 + r) / (1 - r)
  // zeta_ratio < disc_factor: with alpha_r > alpha0 this certifies that the
  // restated bound is not attained.
  bool zeta_ratio_below_factor;
};

/// S(m) = m^-a sum_{n<=m} n^(a-1) + m^a sum_{n>m} n^(-a-1).
double s_alpha(AlphaParam alpha, std::int64_t m, double tol = 1e-12);

/// max over {S(1), ..., S(m_max), 2/alpha}. Prefix sums are accumulated
/// incrementally, so the scan is O(m_max).
SupResult s_alpha_sup(AlphaParam alpha, std::int64_t m_max = 100000,
                      double tol = 1e-12);

double lemma4_estimate(Lemma4 which, AlphaParam alpha, std::int64_t m);

/// partial_upper_12 plus (a-1)(a-2)(a-3)/720 * (m^-a - m^-4). The B_4 term of
/// the expansion is nonnegative for 1 <= a <= 2 and cannot be dropped, so the
/// uncorrected form is violated for 1 < a < 2 and m >= 2; this one holds.
double partial_upper_12_corrected(AlphaParam alpha, std::int64_t m);

double h1(double alpha);
double h2(double alpha);

/// 2 - zeta(2a)/zeta(2a - 1), defined for a > 1.
double improved_lower_bound(AlphaParam alpha);

BoundReport theorem_bounds(AlphaParam alpha);

CompositionBounds composition_bounds(const CompositionQuery& q);

DiscBounds disc_bounds(double r);

AlphaParam transfer_alpha_r(AlphaParam alpha, double r);

RestatedCheck restated_factor_check(AlphaParam alpha, double r);

}  // namespace hforms::bounds
