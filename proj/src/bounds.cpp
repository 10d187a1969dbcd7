#include "hilbert_forms/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hilbert_forms/errors.hpp"
#include "hilbert_forms/roots.hpp"
#include "hilbert_forms/special.hpp"

namespace hforms::bounds {
namespace {

constexpr double kZetaTol = 1e-15;

void require_m(std::int64_t m) {
  if (m < 1) throw PreconditionError("m must be >= 1");
}

// m^a * sum_{n>m} n^(-a-1) with the Euler-Maclaurin budget scaled so the
// product is accurate to tol.
double scaled_tail(double a, std::int64_t m, double tol) {
  const double scale = std::pow(static_cast<double>(m), a);
  return scale * special::tail_sum(-a - 1.0, m, tol / scale);
}

}  // namespace

std::string_view to_string(LowerMethod m) noexcept {
  switch (m) {
    case LowerMethod::continuous_limit: return "continuous_limit";
    case LowerMethod::point_evaluation: return "point_evaluation";
    case LowerMethod::improved: return "improved";
    case LowerMethod::rayleigh: break;
  }
  return "rayleigh";
}

std::string_view to_string(UpperMethod) noexcept { return "cauchy_schwarz_sup"; }

CompositionQuery::CompositionQuery(double re_w) : re_w_(re_w) {
  if (!(re_w > 0.5) || !std::isfinite(re_w)) {
    throw DomainError("Re(w) must exceed 1/2");
  }
}

double s_alpha(AlphaParam alpha, std::int64_t m, double tol) {
  require_m(m);
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
  const double a = alpha.value();
  special::CompensatedSum head;
  for (std::int64_t n = 1; n <= m; ++n) {
    head.add(std::pow(static_cast<double>(n), a - 1.0));
  }
  const double md = static_cast<double>(m);
  return std::pow(md, -a) * head.value() + scaled_tail(a, m, tol);
}

SupResult s_alpha_sup(AlphaParam alpha, std::int64_t m_max, double tol) {
  if (m_max < 2) throw PreconditionError("m_max must be >= 2");
  if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
  const double a = alpha.value();
  SupResult best{2.0 / a, std::nullopt};
  special::CompensatedSum head;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    const double md = static_cast<double>(m);
    head.add(std::pow(md, a - 1.0));
    const double s = std::pow(md, -a) * head.value() + scaled_tail(a, m, tol);
    if (s > best.sup) best = {s, m};
  }
  return best;
}

double lemma4_estimate(Lemma4 which, AlphaParam alpha, std::int64_t m) {
  require_m(m);
  const double a = alpha.value();
  const double md = static_cast<double>(m);
  switch (which) {
    case Lemma4::tail_upper:
      return 1.0 / a - 1.0 / (2.0 * md) + (a + 1.0) / (12.0 * md * md);
    case Lemma4::zeta_lower:
      return 1.0 / a + 0.5 + (a + 1.0) / 12.0 -
             (a + 1.0) * (a + 2.0) * (a + 3.0) / 720.0;
    case Lemma4::partial_upper_12:
      if (a < 1.0 || a > 2.0) {
        throw PreconditionError("partial_upper_12 requires 1 <= alpha <= 2");
      }
      return 1.0 / a + 1.0 / (2.0 * md) + (a - 1.0) / (12.0 * md * md) -
             (a - 3.0) * (a - 4.0) / (12.0 * a) * std::pow(md, -a);
    case Lemma4::partial_upper_23:
      if (a < 2.0 || a > 3.0) {
        throw PreconditionError("partial_upper_23 requires 2 <= alpha <= 3");
      }
      return 1.0 / a + 1.0 / (2.0 * md) + (a - 1.0) / (12.0 * md * md);
  }
  throw PreconditionError("unknown estimate");
}

double partial_upper_12_corrected(AlphaParam alpha, std::int64_t m) {
  const double a = alpha.value();
  const double md = static_cast<double>(m);
  const double b4_term = (a - 1.0) * (a - 2.0) * (a - 3.0) / 720.0 *
                         (std::pow(md, -a) - std::pow(md, -4.0));
  return lemma4_estimate(Lemma4::partial_upper_12, alpha, m) + b4_term;
}

double h1(double a) {
  if (!(a >= 1.0 && a <= 2.0)) throw DomainError("h1 is defined on [1, 2]");
  return (a - 3.0) * (a - 4.0) / (12.0 * a) * std::exp2(-a) - a / 24.0;
}

double h2(double a) {
  if (!(a >= 1.0 && a <= 2.0)) throw DomainError("h2 is defined on [1, 2]");
  return 0.5 + (a + 1.0) / 12.0 - (a + 1.0) * (a + 2.0) * (a + 3.0) / 720.0 -
         1.0 / a + h1(a);
}

double improved_lower_bound(AlphaParam alpha) {
  const double a = alpha.value();
  if (!(a > 1.0)) {
    throw DivergenceError("improved lower bound needs alpha > 1 "
                          "(zeta(2 alpha - 1) diverges)");
  }
  return 2.0 - special::zeta(2.0 * a, kZetaTol) /
                   special::zeta(2.0 * a - 1.0, kZetaTol);
}

BoundReport theorem_bounds(AlphaParam alpha) {
  const double a = alpha.value();
  const double two_over = 2.0 / a;

  double lower = two_over;
  LowerMethod lower_method = LowerMethod::continuous_limit;
  if (const double z = special::zeta(1.0 + 2.0 * a, kZetaTol); z > lower) {
    lower = z;
    lower_method = LowerMethod::point_evaluation;
  }
  if (a > 1.0) {
    if (const double imp = improved_lower_bound(alpha); imp > lower) {
      lower = imp;
      lower_method = LowerMethod::improved;
    }
  }
  const double upper = std::max(two_over, special::zeta(1.0 + a, kZetaTol));
  return {alpha, lower, upper, a <= roots::alpha0(), lower_method,
          UpperMethod::cauchy_schwarz_sup};
}

CompositionBounds composition_bounds(const CompositionQuery& q) {
  const BoundReport b = theorem_bounds(q.alpha());
  return {std::sqrt(special::zeta(2.0 * q.re_w(), kZetaTol)),
          std::sqrt(b.upper), b.exact};
}

DiscBounds disc_bounds(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("r must lie in [0, 1)");
  return {std::sqrt(1.0 / (1.0 - r * r)), std::sqrt((1.0 + r) / (1.0 - r))};
}

AlphaParam transfer_alpha_r(AlphaParam alpha, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("r must lie in [0, 1)");
  return AlphaParam(alpha.value() * (1.0 - r) / (1.0 + r));
}

RestatedCheck restated_factor_check(AlphaParam alpha, double r) {
  const AlphaParam ar = transfer_alpha_r(alpha, r);
  const double lhs = std::sqrt(theorem_bounds(ar).upper);
  const double rhs = std::sqrt(theorem_bounds(alpha).upper) * disc_bounds(r).upper;
  const double zeta_ratio = special::zeta(1.0 + ar.value(), kZetaTol) /
                            special::zeta(1.0 + 2.0 * alpha.value(), kZetaTol);
  const double factor = (1.0 + r) / (1.0 - r);
  // Equality holds exactly whenever alpha <= alpha0; allow rounding there.
  const bool holds = lhs <= rhs * (1.0 + 1e-12);
  return {holds, lhs, rhs, zeta_ratio, factor, zeta_ratio < factor};
}

}  // namespace hforms::bounds
