#include "hilbert_forms/normest.hpp"

#include <cmath>
#include <string>

#include "hilbert_forms/bounds.hpp"
#include "hilbert_forms/errors.hpp"
#include "hilbert_forms/special.hpp"

namespace hforms::normest {
namespace {

constexpr double kZetaTol = 1e-15;

void require_dimension(std::size_t n) {
  if (n < 1) throw PreconditionError("section dimension must be >= 1");
}

void require_sizes(std::size_t n, std::span<const double> v,
                   std::span<double> out) {
  if (v.size() != n || out.size() != n) {
    throw PreconditionError("vector length does not match the section size");
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  special::CompensatedSum acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc.add(a[i] * b[i]);
  return acc.value();
}

template <class Operator>
EigenResult power_iterate(const Operator& op, double tol, int max_iter) {
  if (!(tol > 0.0)) throw PreconditionError("eigen tolerance must be > 0");
  if (max_iter < 1) throw PreconditionError("max_iter must be >= 1");

  const std::size_t n = op.size();
  std::vector<double> v(n), w(n), r(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = 1.0 / std::sqrt(static_cast<double>(i + 1));
  }
  double norm = std::sqrt(dot(v, v));
  for (double& x : v) x /= norm;

  double previous = 0.0;
  double lambda = 0.0;
  double residual = 0.0;
  for (int it = 1; it <= max_iter; ++it) {
    op.apply(v, w);
    lambda = dot(v, w);
    for (std::size_t i = 0; i < n; ++i) r[i] = w[i] - lambda * v[i];
    residual = std::sqrt(dot(r, r));
    if (it > 1 && std::abs(lambda - previous) < tol && residual < tol) {
      return {lambda, it, residual};
    }
    previous = lambda;
    norm = std::sqrt(dot(w, w));
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
  }
  throw ConvergenceError("power iteration did not converge", lambda, residual,
                         max_iter);
}

double test_vector_entry(AlphaParam alpha, const TestVectorSpec& spec,
                         std::size_t m) {
  const double md = static_cast<double>(m);
  if (spec.kind() == TestVectorKind::eps_family) {
    return std::pow(md, -0.5 - spec.eps());
  }
  return std::pow(md, 0.5 - alpha.value());
}

}  // namespace

TruncatedKernelMatrix::TruncatedKernelMatrix(AlphaParam alpha, std::size_t n)
    : alpha_(alpha), n_(n) {
  require_dimension(n);
  if (n > kMaxDimension) {
    throw ResourceError("dense section limited to " +
                        std::to_string(kMaxDimension) + " rows, requested " +
                        std::to_string(n));
  }
  entries_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double k = kernel::kernel_eval(alpha, static_cast<double>(i + 1),
                                           static_cast<double>(j + 1));
      entries_[i * n + j] = k;
      entries_[j * n + i] = k;
    }
  }
}

void TruncatedKernelMatrix::apply(std::span<const double> v,
                                  std::span<double> out) const {
  require_sizes(n_, v, out);
  for (std::size_t i = 0; i < n_; ++i) {
    const double* row = entries_.data() + i * n_;
    double acc = 0.0;
    for (std::size_t j = 0; j < n_; ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
}

KernelOperator::KernelOperator(AlphaParam alpha, std::size_t n)
    : alpha_(alpha), n_(n), rising_(n), falling_(n) {
  require_dimension(n);
  const double a = alpha.value();
  for (std::size_t k = 0; k < n; ++k) {
    const double kd = static_cast<double>(k + 1);
    rising_[k] = std::pow(kd, a - 0.5);
    falling_[k] = std::pow(kd, -a - 0.5);
  }
}

void KernelOperator::apply(std::span<const double> v,
                           std::span<double> out) const {
  require_sizes(n_, v, out);
  // suffix sums first, stored in out, then a forward prefix sweep
  double suffix = 0.0;
  for (std::size_t k = n_; k-- > 0;) {
    out[k] = suffix;
    suffix += falling_[k] * v[k];
  }
  double prefix = 0.0;
  for (std::size_t k = 0; k < n_; ++k) {
    prefix += rising_[k] * v[k];
    out[k] = falling_[k] * prefix + rising_[k] * out[k];
  }
}

EigenResult top_eigen(const TruncatedKernelMatrix& matrix, double tol,
                      int max_iter) {
  return power_iterate(matrix, tol, max_iter);
}

EigenResult top_eigen(const KernelOperator& op, double tol, int max_iter) {
  return power_iterate(op, tol, max_iter);
}

TestVectorSpec TestVectorSpec::eps_family(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw PreconditionError("eps_family requires eps > 0");
  }
  return TestVectorSpec(TestVectorKind::eps_family, eps);
}

void TestVectorSpec::check(AlphaParam alpha) const {
  if (kind_ == TestVectorKind::eps_family && !(eps_ < alpha.value())) {
    throw PreconditionError("eps_family requires 0 < eps < alpha");
  }
}

bool TestVectorSpec::square_summable(AlphaParam alpha) const {
  return kind_ == TestVectorKind::eps_family || alpha.value() > 1.0;
}

double rayleigh_quotient(AlphaParam alpha, const TestVectorSpec& spec,
                         std::size_t n) {
  spec.check(alpha);
  require_dimension(n);
  std::vector<double> a(n), ka(n);
  for (std::size_t m = 0; m < n; ++m) a[m] = test_vector_entry(alpha, spec, m + 1);
  KernelOperator(alpha, n).apply(a, ka);
  return dot(a, ka) / dot(a, a);
}

double rayleigh_limit_alpha_family(AlphaParam alpha) {
  return bounds::improved_lower_bound(alpha);
}

DoubleSum maxmax_double_sum(AlphaParam alpha, std::int64_t n) {
  const double a = alpha.value();
  if (!(a > 1.0)) {
    throw DivergenceError("max-kernel double sum diverges for alpha <= 1");
  }
  if (n < 1) throw PreconditionError("N must be >= 1");
  // exactly 2k - 1 index pairs have max(m, n) = k
  special::CompensatedSum acc;
  for (std::int64_t k = 1; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    acc.add((2.0 * kd - 1.0) * std::pow(kd, -2.0 * a));
  }
  const double closed = 2.0 * special::zeta(2.0 * a - 1.0, kZetaTol) -
                        special::zeta(2.0 * a, kZetaTol);
  return {acc.value(), closed};
}

FailureCheck failure_check(AlphaParam alpha) {
  const double improved = bounds::improved_lower_bound(alpha);
  const double two_over = 2.0 / alpha.value();
  return {improved, two_over, improved > two_over};
}

}  // namespace hforms::normest
