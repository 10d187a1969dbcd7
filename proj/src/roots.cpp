#include "hilbert_forms/roots.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hilbert_forms/bounds.hpp"
#include "hilbert_forms/errors.hpp"
#include "hilbert_forms/special.hpp"

namespace hforms::roots {
namespace {

constexpr double kGridStep = 0.01;

double zeta_tol_for(double tol) { return std::max(tol / 100.0, 1e-15); }

int grid_points(double a, double b) {
  return static_cast<int>(std::lround((b - a) / kGridStep));
}

// Aborts unless f is strictly monotone in the given direction on the 0.01
// grid over [a, b].
void require_monotone(const std::function<double(double)>& f, double a,
                      double b, bool increasing, const char* name) {
  const int n = grid_points(a, b);
  double prev = f(a);
  for (int i = 1; i <= n; ++i) {
    const double x = (i == n) ? b : a + i * kGridStep;
    const double cur = f(x);
    if (increasing ? !(cur > prev) : !(cur < prev)) {
      std::ostringstream os;
      os << name << ": monotonicity pre-check failed near " << x;
      throw BracketError(os.str());
    }
    prev = cur;
  }
}

void require_negative(const std::function<double(double)>& f, double a,
                      double b, const char* name) {
  const int n = grid_points(a, b);
  for (int i = 0; i <= n; ++i) {
    const double x = (i == n) ? b : a + i * kGridStep;
    if (!(f(x) < 0.0)) {
      std::ostringstream os;
      os << name << ": expected no crossing below the bracket, found one near "
         << x;
      throw BracketError(os.str());
    }
  }
}

}  // namespace

RootResult refine_root(const std::function<double(double)>& f, double a,
                       double b, double tol, int max_iter) {
  if (!(a < b)) throw PreconditionError("refine_root needs a < b");
  if (!(tol > 0.0)) throw PreconditionError("refine_root needs tol > 0");

  double lo = a, hi = b;
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return {lo, lo, lo, 0.0, 0};
  if (fhi == 0.0) return {hi, hi, hi, 0.0, 0};
  if (std::signbit(flo) == std::signbit(fhi)) {
    std::ostringstream os;
    os << "no sign change on [" << a << ", " << b << "]";
    throw BracketError(os.str());
  }

  int iter = 0;
  while (hi - lo > tol) {
    if (iter >= max_iter) {
      const double best = std::abs(flo) <= std::abs(fhi) ? lo : hi;
      throw ConvergenceError("refine_root: iteration limit reached", best,
                             std::min(std::abs(flo), std::abs(fhi)), iter);
    }
    ++iter;
    const double mid = lo + 0.5 * (hi - lo);
    double x = mid;
    if (iter % 2 == 1) {
      const double s = hi - fhi * (hi - lo) / (fhi - flo);
      if (s > lo && s < hi) x = s;
    }
    const double fx = f(x);
    if (fx == 0.0) {
      lo = hi = x;
      flo = fhi = 0.0;
      break;
    }
    if (std::signbit(fx) == std::signbit(flo)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
  }

  RootResult r;
  r.bracket_lo = lo;
  r.bracket_hi = hi;
  r.iterations = iter;
  if (std::abs(flo) <= std::abs(fhi)) {
    r.value = lo;
    r.residual = std::abs(flo);
  } else {
    r.value = hi;
    r.residual = std::abs(fhi);
  }
  return r;
}

RootResult solve_alpha0(double tol) {
  const double ztol = zeta_tol_for(tol);
  const auto f = [ztol](double a) { return a * special::zeta(1.0 + a, ztol) - 2.0; };
  require_monotone(f, 1.0, 2.0, true, "alpha*zeta(1+alpha) - 2");
  return refine_root(f, 1.0, 2.0, tol);
}

HRoots solve_h_roots(double tol) {
  require_monotone(bounds::h1, 1.0, 2.0, false, "h1");
  require_monotone(bounds::h2, 1.0, 2.0, true, "h2");
  HRoots r{refine_root(bounds::h1, 1.0, 2.0, tol),
           refine_root(bounds::h2, 1.0, 2.0, tol)};
  if (!(r.alpha1.value > r.alpha2.value)) {
    throw Error("root ordering alpha1 > alpha2 violated");
  }
  return r;
}

Crossings solve_crossings(double tol) {
  const double ztol = zeta_tol_for(tol);
  const auto zeta_gap = [ztol](double a) {
    return special::zeta(1.0 + a, ztol) - 2.0 / a;
  };
  const auto zeta2_gap = [ztol](double a) {
    return special::zeta(1.0 + 2.0 * a, ztol) - 2.0 / a;
  };
  const auto improved_gap = [ztol](double a) {
    return 2.0 - special::zeta(2.0 * a, ztol) / special::zeta(2.0 * a - 1.0, ztol) -
           2.0 / a;
  };
  require_monotone(zeta_gap, 1.0, 2.0, true, "zeta(1+a) - 2/a");
  require_monotone(zeta2_gap, 1.0, 2.0, true, "zeta(1+2a) - 2/a");
  // The improved bound dips before it rises, so it is bracketed on [1.5, 2]
  // after checking that it stays below 2/a on the grid from 1.01 to 1.5.
  require_negative(improved_gap, 1.01, 1.5, "improved - 2/a");
  require_monotone(improved_gap, 1.5, 2.0, true, "improved - 2/a");
  return {refine_root(zeta_gap, 1.0, 2.0, tol),
          refine_root(zeta2_gap, 1.0, 2.0, tol),
          refine_root(improved_gap, 1.5, 2.0, tol)};
}

double alpha0() {
  static const double value = solve_alpha0(1e-12).value;
  return value;
}

}  // namespace hforms::roots
