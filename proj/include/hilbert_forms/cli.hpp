#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it with in-memory streams.
//
// Exit codes: 0 success, 1 runtime or verification failure (including an
// unwritable --output path), 2 usage error (bad flags or out-of-domain values).

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

namespace hforms::cli {

struct ScanRow {
  double alpha;
  double two_over_alpha;
  double zeta_1p_alpha;
  double zeta_1p_2alpha;
  std::optional<double> improved_lower;  // only defined for alpha > 1
  double lower;
  double upper;
};

struct SandwichRow {
  double alpha;
  double lower_gap;  // (lower - 1) * 4^alpha
  double upper_gap;  // (upper - 1) * 2^alpha
};

/// `steps` equally spaced points from alpha_min to alpha_max inclusive.
std::vector<double> alpha_grid(double alpha_min, double alpha_max, int steps);

/// Grid points are evaluated concurrently; rows come back in grid order.
std::vector<ScanRow> scan_rows(double alpha_min, double alpha_max, int steps);
std::vector<SandwichRow> sandwich_rows(double alpha_min, double alpha_max,
                                       int steps);

/// Worker threads for `tasks` independent jobs: hardware concurrency, capped
/// by HILBERT_FORMS_THREADS when set to a positive integer.
std::size_t worker_count(std::size_t tasks);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hforms::cli
