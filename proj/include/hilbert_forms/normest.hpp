#pragma once

// Finite-section lower bounds for ||B_alpha||: dense and matrix-free
// truncations of the kernel matrix, power iteration, Rayleigh quotients of
// the extremal test sequences, and the max-kernel double sum identity.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hilbert_forms/kernel.hpp"

namespace hforms::normest {

/// Dense N x N section [K(m, n)]_{1 <= m, n <= N}. Indices are zero-based:
/// (i, j) holds K(i + 1, j + 1).
class TruncatedKernelMatrix {
 public:
  static constexpr std::size_t kMaxDimension = 20000;

  TruncatedKernelMatrix(AlphaParam alpha, std::size_t n);

  AlphaParam alpha() const noexcept { return alpha_; }
  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * n_ + j];
  }

  void apply(std::span<const double> v, std::span<double> out) const;

 private:
  AlphaParam alpha_;
  std::size_t n_;
  std::vector<double> entries_;
};

/// The same N-section applied in O(N) without storing it:
///   (Kv)_m = m^(-a-1/2) sum_{k<=m} k^(a-1/2) v_k
///          + m^(a-1/2) sum_{k>m} k^(-a-1/2) v_k.
class KernelOperator {
 public:
  KernelOperator(AlphaParam alpha, std::size_t n);

  AlphaParam alpha() const noexcept { return alpha_; }
  std::size_t size() const noexcept { return n_; }

  void apply(std::span<const double> v, std::span<double> out) const;

 private:
  AlphaParam alpha_;
  std::size_t n_;
  std::vector<double> rising_;   // k^(a - 1/2)
  std::vector<double> falling_;  // k^(-a - 1/2)
};

struct EigenResult {
  double value = 0.0;
  int iterations = 0;
  double residual = 0.0;  // ||Av - value v|| for the final unit vector v
};

/// Power iteration from v_m = m^(-1/2). Converged once both the Rayleigh
/// quotient change and the residual drop below tol; throws ConvergenceError
/// (with the last quotient and residual) after max_iter steps.
EigenResult top_eigen(const TruncatedKernelMatrix& matrix, double tol = 1e-8,
                      int max_iter = 200000);
EigenResult top_eigen(const KernelOperator& op, double tol = 1e-8,
                      int max_iter = 200000);

enum class TestVectorKind { eps_family, alpha_family };

/// a_m = m^(-1/2 - eps) (eps_family) or a_m = m^(1/2 - alpha) (alpha_family).
class TestVectorSpec {
 public:
  static TestVectorSpec eps_family(double eps);
  static TestVectorSpec alpha_family() {
    return TestVectorSpec(TestVectorKind::alpha_family, 0.0);
  }

  TestVectorKind kind() const noexcept { return kind_; }
  double eps() const noexcept { return eps_; }

  // Validates the spec against alpha (eps_family needs eps < alpha).
  void check(AlphaParam alpha) const;
  // Whether the infinite sequence lies in l^2.
  bool square_summable(AlphaParam alpha) const;

 private:
  TestVectorSpec(TestVectorKind kind, double eps) : kind_(kind), eps_(eps) {}
  TestVectorKind kind_;
  double eps_;
};

/// B(a, a) / ||a||^2 for the first n coordinates of the test sequence. This
/// is a Rayleigh quotient of the n-section, so it never exceeds its top
/// eigenvalue.
double rayleigh_quotient(AlphaParam alpha, const TestVectorSpec& spec,
                         std::size_t n);

/// n -> inf value of the alpha_family quotient: 2 - zeta(2a)/zeta(2a - 1).
double rayleigh_limit_alpha_family(AlphaParam alpha);

struct DoubleSum {
  double truncated;    // sum over m, n <= N of max(m, n)^(-2a)
  double closed_form;  // 2 zeta(2a - 1) - zeta(2a)
};

DoubleSum maxmax_double_sum(AlphaParam alpha, std::int64_t n);

struct FailureCheck {
  double improved_lower;
  double two_over_alpha;
  bool violates;  // improved_lower > 2/alpha: ||B_alpha|| <= 2/alpha fails
};

FailureCheck failure_check(AlphaParam alpha);

}  // namespace hforms::normest
