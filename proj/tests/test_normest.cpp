#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hilbert_forms/bounds.hpp"
#include "hilbert_forms/errors.hpp"
#include "hilbert_forms/normest.hpp"
#include "oracles.hpp"

using namespace hforms;
using namespace hforms::normest;

namespace {

// Largest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
double jacobi_top(std::vector<double> a, std::size_t n) {
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }
  double top = a[0];
  for (std::size_t i = 1; i < n; ++i) top = std::max(top, a[i * n + i]);
  return top;
}

std::vector<double> section(double alpha, std::size_t n) {
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i * n + j] = oracle::kernel(alpha, i + 1.0, j + 1.0);
  return m;
}

}  // namespace

TEST_CASE("dense section entries and symmetry") {
  const TruncatedKernelMatrix m(AlphaParam(0.8), 40);
  CHECK(m.size() == 40);
  for (std::size_t i = 0; i < 40; ++i) {
    for (std::size_t j = 0; j < 40; ++j) {
      CHECK(m(i, j) == m(j, i));
      CHECK(m(i, j) == doctest::Approx(oracle::kernel(0.8, i + 1.0, j + 1.0)).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(TruncatedKernelMatrix(AlphaParam(1.0), 0), PreconditionError);
  CHECK_THROWS_AS(TruncatedKernelMatrix(AlphaParam(1.0), 20001), ResourceError);
}

TEST_CASE("matrix-free apply matches the dense product") {
  std::mt19937 rng(5);
  std::normal_distribution<double> g;
  for (double a : {0.3, 1.0, 2.7}) {
    for (std::size_t n : {1u, 2u, 17u, 300u}) {
      const TruncatedKernelMatrix dense(AlphaParam(a), n);
      const KernelOperator op(AlphaParam(a), n);
      std::vector<double> v(n), x(n), y(n);
      for (double& e : v) e = g(rng);
      dense.apply(v, x);
      op.apply(v, y);
      for (std::size_t i = 0; i < n; ++i) CHECK(y[i] == doctest::Approx(x[i]).epsilon(1e-12).scale(1.0));
      std::vector<double> wrong(n + 1);
      CHECK_THROWS_AS(op.apply(wrong, y), PreconditionError);
    }
  }
}

TEST_CASE("2x2 section at alpha = 1/2") {
  // [[1, 1/2], [1/2, 1/2]] has top eigenvalue (3 + sqrt 5)/4.
  const auto e = top_eigen(TruncatedKernelMatrix(AlphaParam(0.5), 2), 1e-13);
  CHECK(std::abs(e.value - (3.0 + std::sqrt(5.0)) / 4.0) <= 1e-10);
  CHECK(e.residual < 1e-13);
}

TEST_CASE("power iteration agrees with Jacobi") {
  for (double a : {0.5, 1.0, 1.5, 2.0}) {
    for (std::size_t n : {3u, 16u, 48u}) {
      const double ref = jacobi_top(section(a, n), n);
      CAPTURE(a);
      CAPTURE(n);
      CHECK(top_eigen(TruncatedKernelMatrix(AlphaParam(a), n), 1e-12).value ==
            doctest::Approx(ref).epsilon(1e-10));
      CHECK(top_eigen(KernelOperator(AlphaParam(a), n), 1e-12).value ==
            doctest::Approx(ref).epsilon(1e-10));
    }
  }
}

TEST_CASE("power iteration reports non-convergence") {
  try {
    top_eigen(KernelOperator(AlphaParam(1.5), 512), 1e-12, 2);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.iterations() == 2);
    CHECK(e.best_estimate() > 1.0);
  }
  CHECK_THROWS_AS(top_eigen(KernelOperator(AlphaParam(1.0), 4), 0.0), PreconditionError);
}

TEST_CASE("spectral sandwich on small sections") {
  for (double a : {0.5, 1.0, 1.5, 2.0}) {
    const double upper = bounds::theorem_bounds(AlphaParam(a)).upper;
    double prev = 0.0;
    for (std::size_t n = 2; n <= 256; n *= 2) {
      const double lam = top_eigen(KernelOperator(AlphaParam(a), n), 1e-11).value;
      CAPTURE(a);
      CAPTURE(n);
      CHECK(lam >= prev);
      CHECK(lam <= upper + 1e-9);
      for (double eps : {0.5 * a, 0.1 * a}) {
        CHECK(rayleigh_quotient(AlphaParam(a), TestVectorSpec::eps_family(eps), n) <= lam + 1e-10);
      }
      CHECK(rayleigh_quotient(AlphaParam(a), TestVectorSpec::alpha_family(), n) <= lam + 1e-10);
      prev = lam;
    }
  }
}

TEST_CASE("rayleigh quotient against the direct double sum") {
  for (double a : {0.7, 1.6}) {
    for (bool eps_family : {true, false}) {
      const std::size_t n = 150;
      const auto spec = eps_family ? TestVectorSpec::eps_family(0.3)
                                   : TestVectorSpec::alpha_family();
      std::vector<double> v(n);
      for (std::size_t m = 0; m < n; ++m) {
        v[m] = std::pow(m + 1.0, eps_family ? -0.8 : 0.5 - a);
      }
      oracle::Kahan num, den;
      for (std::size_t i = 0; i < n; ++i) {
        den.add(v[i] * v[i]);
        for (std::size_t j = 0; j < n; ++j) num.add(v[i] * v[j] * oracle::kernel(a, i + 1.0, j + 1.0));
      }
      CHECK(rayleigh_quotient(AlphaParam(a), spec, n) ==
            doctest::Approx(num.value() / den.value()).epsilon(1e-12));
    }
  }
}

TEST_CASE("test sequence validation") {
  CHECK_THROWS_AS(TestVectorSpec::eps_family(0.0), PreconditionError);
  CHECK_THROWS_AS(rayleigh_quotient(AlphaParam(0.5), TestVectorSpec::eps_family(0.5), 10),
                  PreconditionError);
  CHECK(TestVectorSpec::eps_family(0.1).square_summable(AlphaParam(0.5)));
  CHECK_FALSE(TestVectorSpec::alpha_family().square_summable(AlphaParam(1.0)));
  CHECK(TestVectorSpec::alpha_family().square_summable(AlphaParam(1.01)));
}

TEST_CASE("eps-family quotients increase as eps shrinks") {
  double prev = 0.0;
  for (double eps : {0.4, 0.2, 0.1, 0.05}) {
    const double q = rayleigh_quotient(AlphaParam(1.0), TestVectorSpec::eps_family(eps), 10000);
    CHECK(q > prev);
    CHECK(q < 2.0);
    prev = q;
  }
}

TEST_CASE("alpha-family quotient approaches 2 - zeta(2a)/zeta(2a-1)") {
  const double limit = 2.0 - std::pow(oracle::kPi, 4) / 90 / oracle::zeta(3.0);
  CHECK(rayleigh_limit_alpha_family(AlphaParam(2.0)) == doctest::Approx(limit).epsilon(1e-13));
  CHECK(std::abs(rayleigh_quotient(AlphaParam(2.0), TestVectorSpec::alpha_family(), 100000) -
                 limit) < 1e-6);
}

TEST_CASE("max-kernel double sum") {
  const AlphaParam a(1.5);
  CHECK(maxmax_double_sum(a, 1).truncated == 1.0);
  CHECK(maxmax_double_sum(a, 2).truncated == doctest::Approx(1.0 + 3.0 / 8.0));
  const DoubleSum d = maxmax_double_sum(a, 300);
  oracle::Kahan direct;
  for (int m = 1; m <= 300; ++m)
    for (int n = 1; n <= 300; ++n) direct.add(std::pow(std::max(m, n), -3.0));
  CHECK(d.truncated == doctest::Approx(direct.value()).epsilon(1e-13));
  CHECK(d.closed_form == doctest::Approx(2 * oracle::zeta(2.0) - oracle::zeta(3.0)).epsilon(1e-13));
  CHECK(d.truncated < d.closed_form);
  CHECK_THROWS_AS(maxmax_double_sum(AlphaParam(1.0), 10), DivergenceError);
  CHECK_THROWS_AS(maxmax_double_sum(a, 0), PreconditionError);
}

TEST_CASE("failure check") {
  CHECK(failure_check(AlphaParam(1.7)).violates);
  CHECK(failure_check(AlphaParam(2.5)).violates);
  for (int i = 101; i <= 148; ++i) {
    CHECK_FALSE(failure_check(AlphaParam(i / 100.0)).violates);
  }
}
