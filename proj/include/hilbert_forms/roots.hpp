#pragma once

#include <functional>

namespace hforms::roots {

struct RootResult {
  double value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;  // |f(value)|
  int iterations = 0;
};

/// Bracketing root refinement on [a, b] with f(a) f(b) < 0.
///
/// Alternates a secant step through the bracket endpoints (taken only when it
/// lands strictly inside the bracket) with a bisection step, so the width at
/// least halves every two iterations. Stops once hi - lo <= tol and returns
/// the evaluated bracket point with the smaller |f|.
RootResult refine_root(const std::function<double(double)>& f, double a,
                       double b, double tol, int max_iter = 400);

/// Root of alpha * zeta(1 + alpha) = 2 on [1, 2].
RootResult solve_alpha0(double tol = 1e-10);

struct HRoots {
  RootResult alpha1;
  RootResult alpha2;
};

/// Zeros of h1 and h2 on [1, 2]. Throws if alpha1 <= alpha2.
HRoots solve_h_roots(double tol = 1e-10);

struct Crossings {
  RootResult zeta_vs_2a;      // zeta(1 + a) = 2/a
  RootResult zeta2_vs_2a;     // zeta(1 + 2a) = 2/a
  RootResult improved_vs_2a;  // 2 - zeta(2a)/zeta(2a - 1) = 2/a
};

Crossings solve_crossings(double tol = 1e-10);

// alpha0 computed on first use (tol 1e-12) and cached for the process.
double alpha0();

}  // namespace hforms::roots
