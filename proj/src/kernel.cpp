#include "hilbert_forms/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hilbert_forms/errors.hpp"

namespace hforms {

AlphaParam::AlphaParam(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must be positive and finite, got " +
                      std::to_string(alpha));
  }
}

}  // namespace hforms

namespace hforms::kernel {
namespace {

constexpr int kMinDepth = 3;
constexpr int kMaxDepth = 60;

struct SimpsonState {
  const std::function<double(double)>& f;
  int refinements = 0;
  int max_refinements = 0;
  bool exhausted = false;
  double error = 0.0;
};

double simpson_step(SimpsonState& st, double a, double fa, double b, double fb,
                    double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = st.f(lm);
  const double frm = st.f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;

  const bool converged = depth >= kMinDepth && std::abs(delta) <= 15.0 * tol;
  if (converged || depth >= kMaxDepth || st.refinements >= st.max_refinements) {
    if (!converged) st.exhausted = true;
    st.error += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  ++st.refinements;
  return simpson_step(st, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1) +
         simpson_step(st, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1);
}

}  // namespace

QuadratureBudget::QuadratureBudget(double tol, int max_refinements)
    : tol_(tol), max_refinements_(max_refinements) {
  if (!(tol > 0.0)) throw PreconditionError("quadrature tolerance must be > 0");
  if (max_refinements < 1) {
    throw PreconditionError("quadrature refinement budget must be >= 1");
  }
}

double kernel_eval(AlphaParam alpha, double x, double y) {
  if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("kernel arguments must be positive and finite");
  }
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  return std::pow(lo / hi, alpha.value() - 0.5) / hi;
}

double i_alpha(AlphaParam alpha, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("I_alpha requires a positive finite argument");
  }
  return std::pow(std::max(x, 1.0 / x), -alpha.value());
}

QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureBudget& budget) {
  SimpsonState st{f};
  st.max_refinements = budget.max_refinements();
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double value =
      simpson_step(st, a, fa, b, fb, m, fm, whole, budget.tol(), 0);
  if (st.exhausted) {
    throw AccuracyError("adaptive Simpson: refinement budget exhausted", value);
  }
  return {value, st.error, st.refinements};
}

double continuous_norm_quadrature(AlphaParam alpha,
                                  const QuadratureBudget& budget) {
  const double q = std::max(1.0, std::ceil(2.0 / alpha.value()));

  // integral over (0, 1) of K(1, y) y^(-1/2) dy with y = t^q
  auto lower = [&](double t) {
    const double y = std::pow(t, q);
    if (!(y > 0.0)) return 0.0;
    return q * std::pow(t, q - 1.0) * kernel_eval(alpha, 1.0, y) / std::sqrt(y);
  };
  // integral over (1, inf) of K(1, y) y^(-1/2) dy with y = 1/u, u = t^q
  auto upper = [&](double t) {
    const double u = std::pow(t, q);
    if (!(u > 1e-300)) return 0.0;
    return q * std::pow(t, q - 1.0) * kernel_eval(alpha, 1.0, 1.0 / u) *
           std::pow(u, -1.5);
  };

  const QuadratureBudget half(0.5 * budget.tol(), budget.max_refinements());
  double total = 0.0;
  try {
    total += adaptive_simpson(lower, 0.0, 1.0, half).value;
    total += adaptive_simpson(upper, 0.0, 1.0, half).value;
  } catch (const AccuracyError& e) {
    throw AccuracyError("continuous norm quadrature: budget exhausted",
                        total + e.best_estimate());
  }
  return total;
}

double continuous_extremal_ratio(AlphaParam alpha, double eps) {
  const double a = alpha.value();
  if (!(eps > 0.0 && eps < a)) {
    throw PreconditionError("extremal family requires 0 < eps < alpha");
  }
  // Integrating the inner variable up to the diagonal gives
  //   H(f, f) = 2/(a - eps) * (1/(2 eps) - 1/(a + eps)) = 1/(eps (a + eps)),
  // i.e. the (1/(a - eps) + 1/(a + eps)) ||f||^2 leading term plus the
  // bounded correction -1/(a^2 - eps^2).
  const double form = 1.0 / (eps * (a + eps));
  const double norm_sq = 1.0 / (2.0 * eps);
  return form / norm_sq;
}

}  // namespace hforms::kernel
