#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hilbert_forms/errors.hpp"
#include "hilbert_forms/roots.hpp"
#include "oracles.hpp"

using namespace hforms;
using namespace hforms::roots;

namespace {

double h1_ref(double a) {
  return (a - 3) * (a - 4) / (12 * a) * std::pow(2.0, -a) - a / 24;
}

double h2_ref(double a) {
  return 0.5 + (a + 1) / 12 - (a + 1) * (a + 2) * (a + 3) / 720 - 1 / a + h1_ref(a);
}

}  // namespace

TEST_CASE("refine_root on a quadratic") {
  const auto r = refine_root([](double x) { return x * x - 2.0; }, 0.0, 2.0, 1e-13);
  CHECK(std::abs(r.value - std::sqrt(2.0)) <= 1e-13);
  CHECK(r.bracket_hi - r.bracket_lo <= 1e-13);
  CHECK(r.bracket_lo <= r.value);
  CHECK(r.value <= r.bracket_hi);
  CHECK(r.residual == doctest::Approx(std::abs(r.value * r.value - 2.0)));
}

TEST_CASE("refine_root errors") {
  const auto f = [](double x) { return x - 0.3; };
  CHECK_THROWS_AS(refine_root(f, 1.0, 0.0, 1e-10), PreconditionError);
  CHECK_THROWS_AS(refine_root(f, 0.5, 1.0, 1e-10), BracketError);
  CHECK_THROWS_AS(refine_root(f, 0.0, 1.0, 0.0), PreconditionError);
  try {
    refine_root([](double x) { return std::cbrt(x - 0.1); }, -1.0, 1.0, 1e-15, 3);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.iterations() == 3);
  }
  const auto exact = refine_root(f, 0.3, 1.0, 1e-10);
  CHECK(exact.value == 0.3);
}

TEST_CASE("refine_root: random monotone cubics") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> w(0.1, 4.0);
  for (int i = 0; i < 300; ++i) {
    const double root = u(rng);
    const double s = w(rng);
    const auto f = [&](double x) {
      const double d = x - root;
      return d * d * d + s * d;
    };
    const double a = root - w(rng), b = root + w(rng);
    const auto r = refine_root(f, a, b, 1e-11);
    CHECK(std::abs(r.value - root) <= 1e-11);
    CHECK(r.iterations <= 2 * 64);
  }
}

TEST_CASE("alpha0 solves alpha zeta(1+alpha) = 2") {
  const auto r = solve_alpha0(1e-10);
  CHECK(r.bracket_hi - r.bracket_lo <= 1e-10);
  CHECK(std::round(r.value * 100) / 100 == doctest::Approx(1.48));
  CHECK(std::abs(r.value * oracle::zeta(1 + r.value) - 2.0) < 1e-9);
  CHECK(alpha0() == doctest::Approx(r.value).epsilon(1e-10));
}

TEST_CASE("alpha1 and alpha2 are the zeros of h1 and h2") {
  const auto h = solve_h_roots(1e-10);
  CHECK(h.alpha1.value > h.alpha2.value);
  CHECK(std::round(h.alpha1.value * 1000) / 1000 == doctest::Approx(1.553));
  CHECK(std::round(h.alpha2.value * 1000) / 1000 == doctest::Approx(1.507));
  CHECK(std::abs(h1_ref(h.alpha1.value)) < 1e-11);
  CHECK(std::abs(h2_ref(h.alpha2.value)) < 1e-11);
  CHECK(h.alpha1.bracket_hi - h.alpha1.bracket_lo <= 1e-10);
  CHECK(h.alpha2.bracket_hi - h.alpha2.bracket_lo <= 1e-10);
}

TEST_CASE("crossings of the three curves with 2/alpha") {
  const auto c = solve_crossings(1e-10);
  CHECK(c.zeta_vs_2a.value == doctest::Approx(alpha0()).epsilon(1e-9));
  const double b = c.zeta2_vs_2a.value;
  CHECK(b > 1.0);
  CHECK(b < 2.0);
  CHECK(std::abs(b * oracle::zeta(1 + 2 * b) - 2.0) < 1e-9);
  const double g = c.improved_vs_2a.value;
  CHECK(g > alpha0());
  CHECK(g <= 1.7);
  CHECK(std::abs(2.0 - oracle::zeta(2 * g) / oracle::zeta(2 * g - 1) - 2.0 / g) < 1e-9);
}
