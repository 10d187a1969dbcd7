#include "hilbert_forms/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>

#include "hilbert_forms/bounds.hpp"
#include "hilbert_forms/errors.hpp"
#include "hilbert_forms/format.hpp"
#include "hilbert_forms/normest.hpp"
#include "hilbert_forms/roots.hpp"
#include "hilbert_forms/special.hpp"
#include "hilbert_forms/verify.hpp"

#ifndef HILBERT_FORMS_VERSION
#define HILBERT_FORMS_VERSION "unknown"
#endif

namespace hforms::cli {
namespace {

using nlohmann::ordered_json;

constexpr double kScalarTol = 1e-10;
constexpr double kSpectralTol = 1e-8;
constexpr std::size_t kDenseLimit = 4096;
constexpr double kZetaTol = 1e-15;

// Invalid flag values detected after parsing; reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  double alpha = NAN;
  double alpha_min = NAN;
  double alpha_max = NAN;
  int steps = 0;
  std::int64_t m_max = 100000;
  std::size_t n = 1024;
  double eps = 0.1;
  std::string family = "eps";
  double tol = NAN;
  std::string format = "csv";
  std::string output;
  std::string suite = "all";
};

std::string num(double x) { return format_number(x); }

ordered_json json_number(double x) {
  return std::isfinite(x) ? ordered_json(x) : ordered_json(nullptr);
}

AlphaParam require_alpha(double a, const char* flag) {
  if (std::isnan(a)) throw UsageError(std::string(flag) + " is required");
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw UsageError(std::string(flag) + " must be positive and finite, got " +
                     num(a));
  }
  return AlphaParam(a);
}

double resolve_tol(const Options& o, double fallback) {
  if (std::isnan(o.tol)) return fallback;
  if (!(o.tol > 0.0) || !std::isfinite(o.tol)) {
    throw UsageError("--tol must be positive");
  }
  return o.tol;
}

void require_grid(double lo, double hi, int steps) {
  if (!(lo < hi)) throw UsageError("--alpha-min must be below --alpha-max");
  if (steps < 2) throw UsageError("--steps must be at least 2");
}

template <class Row, class Fn>
std::vector<Row> parallel_rows(const std::vector<double>& grid, Fn eval) {
  std::vector<Row> rows(grid.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        rows[i] = eval(grid[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = grid.size();
      }
    }
  };
  const std::size_t workers = worker_count(grid.size());
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

ScanRow scan_row(double a) {
  const AlphaParam alpha(a);
  const bounds::BoundReport b = bounds::theorem_bounds(alpha);
  ScanRow row{a,
              2.0 / a,
              special::zeta(1.0 + a, kZetaTol),
              special::zeta(1.0 + 2.0 * a, kZetaTol),
              std::nullopt,
              b.lower,
              b.upper};
  if (a > 1.0) row.improved_lower = bounds::improved_lower_bound(alpha);
  return row;
}

SandwichRow sandwich_row(double a) {
  const bounds::BoundReport b = bounds::theorem_bounds(AlphaParam(a));
  return {a, (b.lower - 1.0) * std::pow(4.0, a),
          (b.upper - 1.0) * std::pow(2.0, a)};
}

ordered_json root_json(const roots::RootResult& r) {
  return {{"value", r.value},         {"bracket_lo", r.bracket_lo},
          {"bracket_hi", r.bracket_hi}, {"residual", r.residual},
          {"iterations", r.iterations}};
}

// ---- subcommands: each writes its report to `out` and returns the status

int cmd_bounds(const Options& o, std::ostream& out) {
  const AlphaParam alpha = require_alpha(o.alpha, "--alpha");
  const bounds::BoundReport b = bounds::theorem_bounds(alpha);
  const bounds::CompositionQuery q(alpha.value() + 0.5);
  const bounds::CompositionBounds c = bounds::composition_bounds(q);
  if (o.format == "json") {
    ordered_json j = {
        {"alpha", b.alpha.value()},
        {"lower", b.lower},
        {"upper", b.upper},
        {"exact", b.exact},
        {"lower_method", std::string(bounds::to_string(b.lower_method))},
        {"upper_method", std::string(bounds::to_string(b.upper_method))},
        {"composition",
         {{"re_w", q.re_w()}, {"lower", c.lower}, {"upper", c.upper},
          {"sharp", c.sharp}}}};
    out << j.dump(2) << '\n';
  } else {
    out << "alpha,lower,upper,exact,lower_method,upper_method,re_w,"
           "composition_lower,composition_upper,composition_sharp\n"
        << num(b.alpha.value()) << ',' << num(b.lower) << ',' << num(b.upper)
        << ',' << (b.exact ? "true" : "false") << ','
        << bounds::to_string(b.lower_method) << ','
        << bounds::to_string(b.upper_method) << ',' << num(q.re_w()) << ','
        << num(c.lower) << ',' << num(c.upper) << ','
        << (c.sharp ? "true" : "false") << '\n';
  }
  return 0;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const double lo = std::isnan(o.alpha_min) ? 1.0 : o.alpha_min;
  const double hi = std::isnan(o.alpha_max) ? 2.0 : o.alpha_max;
  const int steps = o.steps == 0 ? 101 : o.steps;
  require_alpha(lo, "--alpha-min");
  require_grid(lo, hi, steps);
  const auto rows = scan_rows(lo, hi, steps);
  if (o.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const ScanRow& r : rows) {
      arr.push_back({{"alpha", r.alpha},
                     {"two_over_alpha", r.two_over_alpha},
                     {"zeta_1p_alpha", r.zeta_1p_alpha},
                     {"zeta_1p_2alpha", r.zeta_1p_2alpha},
                     {"improved_lower", r.improved_lower
                                            ? ordered_json(*r.improved_lower)
                                            : ordered_json(nullptr)},
                     {"lower", r.lower},
                     {"upper", r.upper}});
    }
    out << arr.dump(2) << '\n';
    return 0;
  }
  out << "alpha,two_over_alpha,zeta_1p_alpha,zeta_1p_2alpha,improved_lower,"
         "lower,upper\n";
  for (const ScanRow& r : rows) {
    out << num(r.alpha) << ',' << num(r.two_over_alpha) << ','
        << num(r.zeta_1p_alpha) << ',' << num(r.zeta_1p_2alpha) << ','
        << (r.improved_lower ? num(*r.improved_lower) : std::string()) << ','
        << num(r.lower) << ',' << num(r.upper) << '\n';
  }
  return 0;
}

int cmd_sup(const Options& o, std::ostream& out) {
  const AlphaParam alpha = require_alpha(o.alpha, "--alpha");
  if (o.m_max < 2) throw UsageError("--m-max must be at least 2");
  const double tol = resolve_tol(o, 1e-12);
  const bounds::SupResult s = bounds::s_alpha_sup(alpha, o.m_max, tol);
  const double a = alpha.value();
  const double z = special::zeta(1.0 + a, kZetaTol);
  if (o.format == "json") {
    ordered_json j = {{"alpha", a},
                      {"m_max", o.m_max},
                      {"sup", s.sup},
                      {"argmax", s.argmax ? ordered_json(*s.argmax)
                                          : ordered_json("limit")},
                      {"two_over_alpha", 2.0 / a},
                      {"zeta_1p_alpha", z}};
    out << j.dump(2) << '\n';
  } else {
    out << "alpha,m_max,sup,argmax,two_over_alpha,zeta_1p_alpha\n"
        << num(a) << ',' << o.m_max << ',' << num(s.sup) << ','
        << (s.argmax ? std::to_string(*s.argmax) : std::string("limit")) << ','
        << num(2.0 / a) << ',' << num(z) << '\n';
  }
  return 0;
}

int cmd_eig(const Options& o, std::ostream& out) {
  const AlphaParam alpha = require_alpha(o.alpha, "--alpha");
  if (o.n < 1) throw UsageError("--n must be at least 1");
  const double tol = resolve_tol(o, kSpectralTol);
  const bool dense = o.n <= kDenseLimit;
  const normest::EigenResult e =
      dense ? normest::top_eigen(normest::TruncatedKernelMatrix(alpha, o.n), tol)
            : normest::top_eigen(normest::KernelOperator(alpha, o.n), tol);
  const double upper = bounds::theorem_bounds(alpha).upper;
  const char* method = dense ? "dense" : "matrix_free";
  if (o.format == "json") {
    ordered_json j = {{"alpha", alpha.value()}, {"n", o.n},
                      {"value", e.value},       {"iterations", e.iterations},
                      {"residual", e.residual}, {"method", method},
                      {"upper", upper}};
    out << j.dump(2) << '\n';
  } else {
    out << "alpha,n,value,iterations,residual,method,upper\n"
        << num(alpha.value()) << ',' << o.n << ',' << num(e.value) << ','
        << e.iterations << ',' << num(e.residual) << ',' << method << ','
        << num(upper) << '\n';
  }
  return 0;
}

int cmd_rayleigh(const Options& o, std::ostream& out, std::ostream& err) {
  const AlphaParam alpha = require_alpha(o.alpha, "--alpha");
  if (o.n < 1) throw UsageError("--n must be at least 1");
  const bool eps_family = o.family == "eps";
  if (eps_family && !(o.eps > 0.0 && o.eps < alpha.value())) {
    throw UsageError("--eps must satisfy 0 < eps < alpha");
  }
  const normest::TestVectorSpec spec =
      eps_family ? normest::TestVectorSpec::eps_family(o.eps)
                 : normest::TestVectorSpec::alpha_family();
  if (!spec.square_summable(alpha)) {
    err << "warning: m^(1/2 - alpha) is not square summable for alpha <= 1; "
           "the quotient is only a finite-section value\n";
  }
  const double value = normest::rayleigh_quotient(alpha, spec, o.n);
  std::optional<double> limit;
  if (!eps_family && alpha.value() > 1.0) {
    limit = normest::rayleigh_limit_alpha_family(alpha);
  }
  if (o.format == "json") {
    ordered_json j = {{"alpha", alpha.value()},
                      {"n", o.n},
                      {"family", o.family},
                      {"eps", eps_family ? ordered_json(o.eps) : ordered_json(nullptr)},
                      {"value", value},
                      {"limit", limit ? ordered_json(*limit) : ordered_json(nullptr)}};
    out << j.dump(2) << '\n';
  } else {
    out << "alpha,n,family,eps,value,limit\n"
        << num(alpha.value()) << ',' << o.n << ',' << o.family << ','
        << (eps_family ? num(o.eps) : std::string()) << ',' << num(value) << ','
        << (limit ? num(*limit) : std::string()) << '\n';
  }
  return 0;
}

int cmd_roots(const Options& o, std::ostream& out) {
  const double tol = resolve_tol(o, kScalarTol);
  const roots::RootResult a0 = roots::solve_alpha0(tol);
  const roots::HRoots h = roots::solve_h_roots(tol);
  const roots::Crossings c = roots::solve_crossings(tol);
  const std::pair<const char*, const roots::RootResult*> all[] = {
      {"alpha0", &a0},
      {"alpha1", &h.alpha1},
      {"alpha2", &h.alpha2},
      {"zeta_vs_2a", &c.zeta_vs_2a},
      {"zeta2_vs_2a", &c.zeta2_vs_2a},
      {"improved_vs_2a", &c.improved_vs_2a}};
  if (o.format == "json") {
    ordered_json j = ordered_json::object();
    for (const auto& [name, r] : all) j[name] = root_json(*r);
    out << j.dump(2) << '\n';
  } else {
    out << "name,value,bracket_lo,bracket_hi,residual,iterations\n";
    for (const auto& [name, r] : all) {
      out << name << ',' << num(r->value) << ',' << num(r->bracket_lo) << ','
          << num(r->bracket_hi) << ',' << num(r->residual) << ','
          << r->iterations << '\n';
    }
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<std::string_view> names;
  if (o.suite == "all") {
    const auto all = verify::suite_names();
    names.assign(all.begin(), all.end());
  } else {
    const auto all = verify::suite_names();
    if (std::find(all.begin(), all.end(), o.suite) == all.end()) {
      throw UsageError("unknown suite '" + o.suite + "'");
    }
    names.push_back(o.suite);
  }
  std::vector<verify::VerifyOutcome> outcomes;
  for (std::string_view name : names) outcomes.push_back(verify::run_suite(name));

  bool ok = true;
  for (const auto& v : outcomes) ok = ok && v.passed();

  if (o.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& v : outcomes) {
      ordered_json failures = ordered_json::array();
      for (const auto& f : v.failures) {
        failures.push_back({{"inputs", f.inputs},
                            {"expected", f.expected},
                            {"observed", f.observed}});
      }
      arr.push_back({{"suite", v.suite},
                     {"cases", v.cases},
                     {"passed", v.passed()},
                     {"failures", failures}});
    }
    out << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
  } else {
    out << "suite,cases,failures,status\n";
    for (const auto& v : outcomes) {
      out << v.suite << ',' << v.cases << ',' << v.failures.size() << ','
          << (v.passed() ? "pass" : "fail") << '\n';
    }
    for (const auto& v : outcomes) {
      for (const auto& f : v.failures) {
        err << v.suite << ": " << f.inputs << ": expected " << f.expected
            << ", observed " << f.observed << '\n';
      }
    }
  }
  return ok ? 0 : 1;
}

int cmd_sandwich(const Options& o, std::ostream& out) {
  const double lo = std::isnan(o.alpha_min) ? 2.0 : o.alpha_min;
  const double hi = std::isnan(o.alpha_max) ? 8.0 : o.alpha_max;
  const int steps = o.steps == 0 ? 61 : o.steps;
  if (!(lo >= 2.0)) {
    throw UsageError("the sandwich scan needs --alpha-min >= 2, got " + num(lo));
  }
  require_grid(lo, hi, steps);
  const auto rows = sandwich_rows(lo, hi, steps);
  if (o.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const SandwichRow& r : rows) {
      arr.push_back({{"alpha", r.alpha},
                     {"lower_gap_4pow", json_number(r.lower_gap)},
                     {"upper_gap_2pow", json_number(r.upper_gap)}});
    }
    out << arr.dump(2) << '\n';
    return 0;
  }
  out << "alpha,lower_minus_1_times_4pow_alpha,upper_minus_1_times_2pow_alpha\n";
  for (const SandwichRow& r : rows) {
    out << num(r.alpha) << ',' << num(r.lower_gap) << ',' << num(r.upper_gap)
        << '\n';
  }
  return 0;
}

void print_seed_info(std::ostream& out) {
  const roots::HRoots h = roots::solve_h_roots(1e-12);
  out << "hilbert-forms " << HILBERT_FORMS_VERSION << '\n'
      << "alpha0 " << num(roots::alpha0()) << '\n'
      << "alpha1 " << num(h.alpha1.value) << '\n'
      << "alpha2 " << num(h.alpha2.value) << '\n';
}

}  // namespace

std::vector<double> alpha_grid(double alpha_min, double alpha_max, int steps) {
  if (!(alpha_min < alpha_max)) {
    throw PreconditionError("alpha_min must be below alpha_max");
  }
  if (steps < 2) throw PreconditionError("a grid needs at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  const double width = alpha_max - alpha_min;
  for (int i = 0; i < steps; ++i) {
    grid[i] = alpha_min + width * i / (steps - 1);
  }
  grid.back() = alpha_max;
  return grid;
}

std::vector<ScanRow> scan_rows(double alpha_min, double alpha_max, int steps) {
  return parallel_rows<ScanRow>(alpha_grid(alpha_min, alpha_max, steps),
                                scan_row);
}

std::vector<SandwichRow> sandwich_rows(double alpha_min, double alpha_max,
                                       int steps) {
  if (!(alpha_min >= 2.0)) {
    throw PreconditionError("the sandwich scan is stated for alpha >= 2");
  }
  return parallel_rows<SandwichRow>(alpha_grid(alpha_min, alpha_max, steps),
                                    sandwich_row);
}

std::size_t worker_count(std::size_t tasks) {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HILBERT_FORMS_THREADS")) {
    std::size_t cap = 0;
    const char* end = env + std::char_traits<char>::length(env);
    const auto res = std::from_chars(env, end, cap);
    if (res.ec == std::errc() && res.ptr == end && cap > 0) n = std::min(n, cap);
  }
  return std::max<std::size_t>(1, std::min(n, tasks));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds, scans and checks for the Hilbert-type forms "
               "sum a_m b_n (mn)^(alpha-1/2) / max(m,n)^(2 alpha)",
               "hilbert-forms"};
  app.set_version_flag("--version", std::string("hilbert-forms ") +
                                        HILBERT_FORMS_VERSION);
  bool seed_info = false;
  app.add_flag("--seed-info", seed_info,
               "print the library version and the computed alpha0, alpha1, alpha2");
  app.require_subcommand(0, 1);

  Options o;
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output", o.output, "write the report to this file");
  };
  const auto add_alpha = [&](CLI::App* sub) {
    sub->add_option("--alpha", o.alpha, "kernel parameter alpha > 0")->required();
  };
  const auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--alpha-min", o.alpha_min, "first grid point");
    sub->add_option("--alpha-max", o.alpha_max, "last grid point");
    sub->add_option("--steps", o.steps, "number of grid points (>= 2)");
  };
  const auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "tolerance override");
  };

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "lower/upper bounds for one alpha");
  add_alpha(bounds_cmd);
  add_format(bounds_cmd);

  CLI::App* scan_cmd = app.add_subcommand("scan", "bound curves over an alpha grid");
  add_grid(scan_cmd);
  add_format(scan_cmd);

  CLI::App* sup_cmd = app.add_subcommand("sup", "supremum of the majorant sequence");
  add_alpha(sup_cmd);
  sup_cmd->add_option("--m-max", o.m_max, "largest m scanned");
  add_tol(sup_cmd);
  add_format(sup_cmd);

  CLI::App* eig_cmd = app.add_subcommand("eig", "top eigenvalue of the n-section");
  add_alpha(eig_cmd);
  eig_cmd->add_option("--n", o.n, "section size");
  add_tol(eig_cmd);
  add_format(eig_cmd);

  CLI::App* rayleigh_cmd =
      app.add_subcommand("rayleigh", "Rayleigh quotient of a test sequence");
  add_alpha(rayleigh_cmd);
  rayleigh_cmd->add_option("--n", o.n, "section size");
  rayleigh_cmd->add_option("--family", o.family, "test sequence family")
      ->check(CLI::IsMember({"eps", "alpha"}));
  rayleigh_cmd->add_option("--eps", o.eps, "exponent offset for --family eps");
  add_format(rayleigh_cmd);

  CLI::App* roots_cmd = app.add_subcommand("roots", "alpha0, alpha1, alpha2 and crossings");
  add_tol(roots_cmd);
  add_format(roots_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
  verify_cmd->add_option("--suite", o.suite,
                         "lemma4, signs, monotone_h, identity, sup_formula, "
                         "transference or all");
  add_format(verify_cmd);

  CLI::App* sandwich_cmd =
      app.add_subcommand("sandwich", "normalised bound gaps for alpha >= 2");
  add_grid(sandwich_cmd);
  add_format(sandwich_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (seed_info) {
      print_seed_info(out);
      if (app.get_subcommands().empty()) return 0;
    }
    if (app.get_subcommands().empty()) {
      err << app.help();
      return 2;
    }
    CLI::App* sub = app.get_subcommands().front();

    std::ostringstream report;
    int status = 0;
    if (sub == bounds_cmd) status = cmd_bounds(o, report);
    else if (sub == scan_cmd) status = cmd_scan(o, report);
    else if (sub == sup_cmd) status = cmd_sup(o, report);
    else if (sub == eig_cmd) status = cmd_eig(o, report);
    else if (sub == rayleigh_cmd) status = cmd_rayleigh(o, report, err);
    else if (sub == roots_cmd) status = cmd_roots(o, report);
    else if (sub == verify_cmd) status = cmd_verify(o, report, err);
    else status = cmd_sandwich(o, report);

    if (o.output.empty()) {
      out << report.str();
    } else {
      std::ofstream file(o.output, std::ios::binary);
      file << report.str();
      file.close();
      if (!file) {
        err << "error: cannot write " << o.output << '\n';
        return 1;
      }
    }
    return status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace hforms::cli
