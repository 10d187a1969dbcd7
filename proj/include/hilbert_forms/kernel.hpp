#pragma once

#include <functional>

namespace hforms {

/// Kernel parameter alpha: strictly positive and finite.
class AlphaParam {
 public:
  explicit AlphaParam(double alpha);
  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

}  // namespace hforms

namespace hforms::kernel {

class QuadratureBudget {
 public:
  explicit QuadratureBudget(double tol = 1e-10, int max_refinements = 1 << 20);
  double tol() const noexcept { return tol_; }
  int max_refinements() const noexcept { return max_refinements_; }

 private:
  double tol_;
  int max_refinements_;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int refinements = 0;
};

// K(x, y) = (xy)^(alpha - 1/2) / max(x, y)^(2 alpha), evaluated as
// (min/max)^(alpha - 1/2) / max so that large arguments do not overflow.
double kernel_eval(AlphaParam alpha, double x, double y);

// (alpha/pi) * integral of x^(it) / (alpha^2 + t^2) dt over the real line,
// in closed form max(x, 1/x)^-alpha.
double i_alpha(AlphaParam alpha, double x);

/// Adaptive Simpson on a closed interval. Each half of a split receives half
/// of the parent tolerance; a panel is accepted once the two-level Simpson
/// difference is below 15x its tolerance. Throws AccuracyError (carrying
/// the estimate) when the refinement budget runs out.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  double a, double b,
                                  const QuadratureBudget& budget);

/// Integral of K(1, y) / sqrt(y) over (0, inf), split at 1. The upper part
/// is mapped onto (0, 1] by y -> 1/y; both parts are graded with y = t^q to
/// remove the endpoint singularity at 0 for small alpha.
double continuous_norm_quadrature(AlphaParam alpha,
                                  const QuadratureBudget& budget);

/// H(f, f) / ||f||^2 for f(t) = t^(-1/2 - eps) on (1, inf), 0 < eps < alpha.
double continuous_extremal_ratio(AlphaParam alpha, double eps);

}  // namespace hforms::kernel
