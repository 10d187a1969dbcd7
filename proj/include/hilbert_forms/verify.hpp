#pragma once

// Invariant suites run by `hilbert-forms verify --suite <name>`. Each suite
// checks a family of inequalities or identities against independent
// reference computations and reports every violated case with its inputs.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hforms::verify {

struct Failure {
  std::string inputs;
  std::string expected;  // the relation that should hold
  std::string observed;
};

struct VerifyOutcome {
  std::string suite;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  bool passed() const noexcept { return failures.empty(); }
};

// lemma4, signs, monotone_h, identity, sup_formula, transference
std::span<const std::string_view> suite_names() noexcept;

/// Throws PreconditionError for an unknown suite name.
VerifyOutcome run_suite(std::string_view name);

}  // namespace hforms::verify
