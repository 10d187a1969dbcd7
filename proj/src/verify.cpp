#include "hilbert_forms/verify.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>

#include "hilbert_forms/bounds.hpp"
#include "hilbert_forms/errors.hpp"
#include "hilbert_forms/format.hpp"
#include "hilbert_forms/normest.hpp"
#include "hilbert_forms/roots.hpp"
#include "hilbert_forms/special.hpp"

namespace hforms::verify {
namespace {

constexpr std::array<std::string_view, 6> kSuites = {
    "lemma4", "signs", "monotone_h", "identity", "sup_formula", "transference"};

// Slack granted to a computed inequality lhs <= rhs. The inequalities are
// exact; this only absorbs binary64 rounding in both sides.
constexpr double kRoundingUlps = 16.0 * DBL_EPSILON;

bool leq(double lhs, double rhs) {
  return lhs <= rhs + kRoundingUlps * std::max(std::abs(lhs), std::abs(rhs));
}

class Recorder {
 public:
  explicit Recorder(std::string_view suite) { outcome_.suite = suite; }

  // `describe` runs only for failing cases.
  void check(bool ok, const std::function<Failure()>& describe) {
    ++outcome_.cases;
    if (!ok) outcome_.failures.push_back(describe());
  }

  VerifyOutcome take() { return std::move(outcome_); }

 private:
  VerifyOutcome outcome_;
};

std::string kv(std::string_view key, double v) {
  return std::string(key) + "=" + format_number(v);
}

// Suite "lemma4": the four closed-form inequalities and the corrected form of
// partial_upper_12 against direct sums for alpha = 0.1 .. 3.0, m = 1 .. 1000. The
// tail reference is a direct sum to 10^6 closed by the midpoint rule,
// sum_{n>N} f(n) ~ integral from N+1/2 plus f'(N+1/2)/24, accurate far below rounding.
VerifyOutcome lemma4_suite() {
  Recorder rec("lemma4");
  constexpr std::int64_t kTop = 1000;
  constexpr std::int64_t kFar = 1'000'000;
  using bounds::Lemma4;

  for (int i = 1; i <= 30; ++i) {
    const double a = i / 10.0;
    const AlphaParam alpha(a);
    const double p = -a - 1.0;

    special::CompensatedSum tail;
    const double h = static_cast<double>(kFar) + 0.5;
    tail.add(std::pow(h, p + 1.0) / (-p - 1.0));
    tail.add(p * std::pow(h, p - 1.0) / 24.0);
    for (std::int64_t n = kFar; n > kTop; --n) {
      tail.add(std::pow(static_cast<double>(n), p));
    }
    std::vector<double> tails(kTop + 1);
    for (std::int64_t m = kTop; m >= 1; --m) {
      tails[m] = tail.value();
      tail.add(std::pow(static_cast<double>(m), p));
    }
    const double zeta_ref = tail.value();

    const double zl = bounds::lemma4_estimate(Lemma4::zeta_lower, alpha, 1);
    rec.check(leq(zl, zeta_ref), [&] {
      return Failure{kv("alpha", a), "zeta(1+alpha) >= zeta_lower",
                     kv("zeta", zeta_ref) + " " + kv("estimate", zl)};
    });

    special::CompensatedSum head;
    for (std::int64_t m = 1; m <= kTop; ++m) {
      const double md = static_cast<double>(m);
      head.add(std::pow(md, a - 1.0));

      const double scaled_tail = std::pow(md, a) * tails[m];
      const double tu = bounds::lemma4_estimate(Lemma4::tail_upper, alpha, m);
      rec.check(leq(scaled_tail, tu), [&] {
        return Failure{kv("alpha", a) + " " + kv("m", md),
                       "m^a sum_{n>m} n^(-a-1) <= tail_upper",
                       kv("direct", scaled_tail) + " " + kv("estimate", tu)};
      });

      const double partial = std::pow(md, -a) * head.value();
      if (a >= 1.0 && a <= 2.0) {
        const double pu =
            bounds::lemma4_estimate(Lemma4::partial_upper_12, alpha, m);
        rec.check(leq(partial, pu), [&] {
          return Failure{kv("alpha", a) + " " + kv("m", md),
                         "m^-a sum_{n<=m} n^(a-1) <= partial_upper_12",
                         kv("direct", partial) + " " + kv("estimate", pu)};
        });
        const double pc = bounds::partial_upper_12_corrected(alpha, m);
        rec.check(leq(partial, pc), [&] {
          return Failure{kv("alpha", a) + " " + kv("m", md),
                         "m^-a sum_{n<=m} n^(a-1) <= partial_upper_12_corrected",
                         kv("direct", partial) + " " + kv("estimate", pc)};
        });
      }
      if (a >= 2.0 && a <= 3.0) {
        const double pu =
            bounds::lemma4_estimate(Lemma4::partial_upper_23, alpha, m);
        rec.check(leq(partial, pu), [&] {
          return Failure{kv("alpha", a) + " " + kv("m", md),
                         "m^-a sum_{n<=m} n^(a-1) <= partial_upper_23",
                         kv("direct", partial) + " " + kv("estimate", pu)};
        });
      }
    }
  }
  return rec.take();
}

VerifyOutcome signs_suite() {
  Recorder rec("signs");
  for (int k : {1, 2}) {
    const auto expected = (k % 2 == 1) ? special::RemainderSign::positive
                                       : special::RemainderSign::negative;
    for (double e : {-0.5, -2.0, -3.0}) {
      for (double x0 : {1.0, 5.0, 50.0}) {
        const auto got = special::remainder_sign_check(e, k, x0);
        rec.check(got == expected, [&] {
          return Failure{
              kv("k", k) + " " + kv("g_exponent", e) + " " + kv("x0", x0),
              "sign = " + std::string(special::to_string(expected)),
              std::string(special::to_string(got))};
        });
      }
    }
  }
  return rec.take();
}

VerifyOutcome monotone_h_suite() {
  Recorder rec("monotone_h");
  double prev1 = bounds::h1(1.0);
  double prev2 = bounds::h2(1.0);
  for (int i = 1; i <= 1000; ++i) {
    const double a = 1.0 + i / 1000.0;
    const double v1 = bounds::h1(a);
    const double v2 = bounds::h2(a);
    rec.check(v1 < prev1, [&] {
      return Failure{kv("alpha", a), "h1 strictly decreasing",
                     kv("h1(prev)", prev1) + " " + kv("h1", v1)};
    });
    rec.check(v2 > prev2, [&] {
      return Failure{kv("alpha", a), "h2 strictly increasing",
                     kv("h2(prev)", prev2) + " " + kv("h2", v2)};
    });
    prev1 = v1;
    prev2 = v2;
  }
  return rec.take();
}

// Suite "identity": sum over m, n of max(m, n)^(-2a) = 2 zeta(2a-1) - zeta(2a).
// Truncations must increase towards the closed form with shrinking gaps, and
// the truncation completed by its two power tails must reproduce it.
VerifyOutcome identity_suite() {
  Recorder rec("identity");
  for (double a : {1.25, 1.5, 2.0, 2.5, 3.0}) {
    const AlphaParam alpha(a);
    double prev_trunc = 0.0;
    double prev_gap = INFINITY;
    for (std::int64_t n : {100, 1000, 10000, 100000}) {
      const auto d = normest::maxmax_double_sum(alpha, n);
      const double gap = d.closed_form - d.truncated;
      const std::string in = kv("alpha", a) + " " + kv("N", static_cast<double>(n));
      rec.check(d.truncated >= prev_trunc, [&] {
        return Failure{in, "truncated sum nondecreasing in N",
                       kv("previous", prev_trunc) + " " + kv("truncated", d.truncated)};
      });
      rec.check(leq(d.truncated, d.closed_form), [&] {
        return Failure{in, "truncated <= closed form",
                       kv("truncated", d.truncated) + " " + kv("closed", d.closed_form)};
      });
      const bool converged = leq(d.closed_form, d.truncated);
      rec.check(converged || gap < prev_gap, [&] {
        return Failure{in, "gap shrinks as N grows",
                       kv("previous_gap", prev_gap) + " " + kv("gap", gap)};
      });
      const double completed = d.truncated +
                               2.0 * special::tail_sum(1.0 - 2.0 * a, n) -
                               special::tail_sum(-2.0 * a, n);
      rec.check(std::abs(completed - d.closed_form) <= 1e-9, [&] {
        return Failure{in, "|truncated + tails - closed form| <= 1e-9",
                       kv("completed", completed) + " " + kv("closed", d.closed_form)};
      });
      prev_trunc = d.truncated;
      prev_gap = gap;
    }
  }
  return rec.take();
}

VerifyOutcome sup_formula_suite() {
  Recorder rec("sup_formula");
  for (double a : {0.5, 1.0, 1.2, 1.5, 2.0, 2.5, 3.0, 4.0}) {
    const AlphaParam alpha(a);
    const auto s = bounds::s_alpha_sup(alpha, 100000);
    const double z = special::zeta(1.0 + a, 1e-15);
    const double expected = std::max(2.0 / a, z);
    rec.check(std::abs(s.sup - expected) <= 1e-6, [&] {
      return Failure{kv("alpha", a) + " m_max=100000",
                     "|sup S - max(2/alpha, zeta(1+alpha))| <= 1e-6",
                     kv("sup", s.sup) + " " + kv("expected", expected)};
    });
    const bool limit_expected = 2.0 / a >= z;
    rec.check(s.at_limit() == limit_expected, [&] {
      return Failure{kv("alpha", a), limit_expected ? "argmax = limit" : "argmax = 1",
                     s.at_limit() ? "limit" : std::to_string(*s.argmax)};
    });
    if (!limit_expected) {
      rec.check(!s.at_limit() && *s.argmax == 1, [&] {
        return Failure{kv("alpha", a), "argmax = 1",
                       s.at_limit() ? "limit" : std::to_string(*s.argmax)};
      });
    }
  }
  return rec.take();
}

VerifyOutcome transference_suite() {
  Recorder rec("transference");
  const double a0 = roots::alpha0();
  const std::array<double, 6> radii = {0.0, 0.1, 1.0 / 3.0, 0.5, 0.9, 0.99};
  for (double a : {0.25, 0.5, 1.0, 1.25, a0, 2.0, 4.0, 6.0}) {
    const AlphaParam alpha(a);
    for (double r : radii) {
      const auto c = bounds::restated_factor_check(alpha, r);
      const std::string in = kv("alpha", a) + " " + kv("r", r);
      rec.check(c.holds, [&] {
        return Failure{in, "sqrt(U(alpha_r)) <= sqrt(U(alpha)) * disc upper",
                       kv("lhs", c.lhs) + " " + kv("rhs", c.rhs)};
      });
      if (a <= a0) {
        rec.check(std::abs(c.lhs - c.rhs) <= 1e-12 * c.rhs, [&] {
          return Failure{in, "equality when alpha <= alpha0",
                         kv("lhs", c.lhs) + " " + kv("rhs", c.rhs)};
        });
      }
    }
    double prev = a;
    for (double r : {0.9, 0.99, 0.999}) {
      const double ar = bounds::transfer_alpha_r(alpha, r).value();
      rec.check(ar < prev, [&] {
        return Failure{kv("alpha", a) + " " + kv("r", r),
                       "alpha_r decreasing as r -> 1", kv("alpha_r", ar)};
      });
      prev = ar;
    }
  }
  const double half = bounds::transfer_alpha_r(AlphaParam(1.0), 1.0 / 3.0).value();
  rec.check(std::abs(half - 0.5) <= 1e-15, [&] {
    return Failure{"alpha=1 r=1/3", "alpha_r = 1/2", kv("alpha_r", half)};
  });
  const auto large = bounds::restated_factor_check(AlphaParam(6.0), 0.9);
  rec.check(large.zeta_ratio_below_factor, [&] {
    return Failure{"alpha=6 r=0.9",
                   "zeta(1+alpha_r)/zeta(1+2alpha) < (1+r)/(1-r)",
                   kv("ratio", large.zeta_ratio) + " " + kv("factor", large.disc_factor)};
  });
  return rec.take();
}

}  // namespace

std::span<const std::string_view> suite_names() noexcept { return kSuites; }

VerifyOutcome run_suite(std::string_view name) {
  if (name == "lemma4") return lemma4_suite();
  if (name == "signs") return signs_suite();
  if (name == "monotone_h") return monotone_h_suite();
  if (name == "identity") return identity_suite();
  if (name == "sup_formula") return sup_formula_suite();
  if (name == "transference") return transference_suite();
  throw PreconditionError("unknown verify suite: " + std::string(name));
}

}  // namespace hforms::verify
