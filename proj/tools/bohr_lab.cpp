// bohr_lab: radii, table reproduction, alpha sweeps and the check suites.
#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "bohr/checks.hpp"
#include "bohr/errors.hpp"
#include "bohr/format.hpp"
#include "bohr/functionals.hpp"
#include "bohr/tables.hpp"

using namespace bohr;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kSolver = 3 };

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FunctionalArgs {
  std::string kind;
  int n = 0, m = 0, p = 0;
  CLI::Option* n_opt = nullptr;
  CLI::Option* m_opt = nullptr;
  CLI::Option* p_opt = nullptr;
  std::string variant;

  void attach(CLI::App* app) {
    app->add_option("--kind", kind, "functional kind")->required();
    n_opt = app->add_option("--n", n, "truncation index / degree N");
    m_opt = app->add_option("--m", m, "argument power or refinement order m");
    p_opt = app->add_option("--p", p, "power p");
    app->add_option("--variant", variant, "statement | proof | alternate");
  }

  Functional build() const {
    const auto k = parse_kind(kind);
    if (!k) throw Usage("unknown kind '" + kind + "'");
    std::optional<Variant> v;
    if (!variant.empty()) {
      v = parse_variant(variant);
      if (!v) throw Usage("unknown variant '" + variant + "'");
    }
    const auto opt = [](const CLI::Option* o, int value) {
      return o->count() > 0 ? std::optional<int>(value) : std::nullopt;
    };
    return make_functional(*k, opt(n_opt, n), opt(m_opt, m), opt(p_opt, p), v);
  }
};

struct OutputArgs {
  std::string format = "plain";
  int precision = 4;
  CLI::Option* precision_opt = nullptr;
  bool verbose = false;

  void attach(CLI::App* app, const std::string& default_format) {
    format = default_format;
    app->add_option("--format", format, "csv | markdown | plain")
        ->check(CLI::IsMember({"csv", "markdown", "plain"}));
    precision_opt = app->add_option("--precision", precision,
                                    "decimals printed (1-15)");
    app->add_flag("--verbose", verbose, "print brackets and residuals");
  }

  int resolve_precision() const {
    int value = 4;
    if (precision_opt->count() > 0) {
      value = precision;
    } else if (const char* env = std::getenv("BOHR_LAB_PRECISION")) {
      try {
        std::size_t used = 0;
        value = std::stoi(env, &used);
        if (env[used] != '\0') throw std::invalid_argument(env);
      } catch (const std::exception&) {
        throw Usage("BOHR_LAB_PRECISION is not an integer: '" +
                    std::string(env) + "'");
      }
    }
    if (value < 1 || value > 15) {
      throw Usage("precision must lie in [1, 15], got " + std::to_string(value));
    }
    return value;
  }
};

struct SolverArgs {
  SolverOptions options;

  void attach(CLI::App* app) {
    app->add_option("--scan-step", options.scan_step, "scan increment");
    app->add_option("--root-tol", options.root_tol, "bisection tolerance");
  }
};

Alpha make_alpha(double value) {
  try {
    return Alpha(value);
  } catch (const DomainError& e) {
    throw Usage(e.what());
  }
}

std::string alpha_text(double alpha) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", alpha);
  return buf;
}

void header(const Functional& f) {
  std::cout << "# " << f.label() << " variant=" << variant_name(f.variant)
            << '\n';
}

int cmd_radius(const FunctionalArgs& fa, double alpha_value,
               const OutputArgs& out, const SolverArgs& sa) {
  const Functional f = fa.build();
  const Alpha alpha = make_alpha(alpha_value);
  const int prec = out.resolve_precision();
  sa.options.validate();
  const RadiusEquation eq(f, alpha);
  const RootResult res = solve(eq, sa.options);

  header(f);
  if (out.format == "csv") {
    std::cout << "alpha,root";
    if (out.verbose) std::cout << ",lo,hi,residual,iterations";
    std::cout << '\n' << alpha_text(alpha.value()) << ',' << fixed(res.root, prec);
    if (out.verbose) {
      std::cout << ',' << fixed(res.lo, 15) << ',' << fixed(res.hi, 15) << ','
                << sci(res.residual_at_root) << ',' << res.iterations;
    }
    std::cout << '\n';
  } else if (out.format == "markdown") {
    std::cout << "| alpha | root |\n|---|---|\n| " << alpha_text(alpha.value())
              << " | " << fixed(res.root, prec) << " |\n";
  } else {
    std::cout << fixed(res.root, prec) << '\n';
  }
  if (out.verbose && out.format != "csv") {
    std::cout << "# bracket [" << fixed(res.lo, 15) << ", " << fixed(res.hi, 15)
              << "] residual " << sci(res.residual_at_root) << " iterations "
              << res.iterations << " distance " << fixed(eq.distance(), 15)
              << '\n';
  }
  return kOk;
}

int cmd_table(const std::string& id, const std::string& variant,
              const OutputArgs& out, const SolverArgs& sa) {
  const PaperTable* table = nullptr;
  try {
    table = &find_table(id);
  } catch (const UnknownTable& e) {
    throw Usage(e.what());
  }
  std::optional<Variant> v;
  if (!variant.empty()) {
    v = parse_variant(variant);
    if (!v) throw Usage("unknown variant '" + variant + "'");
    for (const auto& f : table->series) {
      if (!supports_variant(f.kind, *v)) {
        throw Usage(std::string(kind_name(f.kind)) + " has no '" + variant +
                    "' variant");
      }
    }
  }
  const int prec = out.resolve_precision();
  sa.options.validate();
  const TableReport report = reproduce(*table, v, sa.options);

  std::cout << "# " << table->id << " variant="
            << (v ? std::string(variant_name(*v)) : table->binding) << '\n';
  if (out.format == "csv") {
    write_csv(std::cout, *table, report, prec);
  } else if (out.format == "markdown") {
    write_markdown(std::cout, *table, report, prec);
  } else {
    write_plain(std::cout, *table, report, prec);
  }
  return report.ok() ? kOk : kFailed;
}

int cmd_curve(const FunctionalArgs& fa, double from, double to, double step,
              const OutputArgs& out, const SolverArgs& sa) {
  const Functional f = fa.build();
  if (!(step > 0.0)) throw Usage("--step must be positive");
  if (!(from <= to)) throw Usage("empty alpha range");
  make_alpha(from);
  make_alpha(to);
  const int prec = out.resolve_precision();
  sa.options.validate();

  std::vector<double> alphas;
  for (long k = 0;; ++k) {
    // snap to 1e-12 so that 0.1 + 2 * 0.1 prints as 0.3
    const double a = std::round((from + k * step) * 1e12) / 1e12;
    if (a > to + 1e-12) break;
    alphas.push_back(a);
  }

  header(f);
  const bool md = out.format == "markdown";
  std::cout << (md ? "| alpha | root |\n|---|---|\n" : "alpha,root\n");
  for (double a : alphas) {
    const auto res = solve(radius_equation(f, Alpha(a)), sa.options);
    if (md) {
      std::cout << "| " << alpha_text(a) << " | " << fixed(res.root, prec)
                << " |\n";
    } else {
      std::cout << alpha_text(a) << ',' << fixed(res.root, prec) << '\n';
    }
  }
  return kOk;
}

int cmd_check(std::vector<std::string> suites, bool all,
              const std::string& grid_name, const OutputArgs& out) {
  for (const auto& s : suites) {
    bool known = false;
    for (const auto& n : suite_names()) known = known || n == s;
    if (!known) throw Usage("unknown suite '" + s + "'");
  }
  if (all || suites.empty()) suites = suite_names();
  const Grid grid = grid_name == "coarse" ? Grid::kCoarse : Grid::kFull;

  long checks = 0, failures = 0;
  int flagged = 0;
  for (const auto& s : suites) {
    const SuiteReport rep = run_suite(s, grid);
    checks += rep.checks();
    failures += rep.failures();
    flagged += rep.flagged_cells;
    std::cout << (rep.ok() ? "PASS " : "FAIL ") << s << ": " << rep.checks()
              << " checks, " << rep.failures() << " failures";
    if (rep.flagged_cells > 0) {
      std::cout << ", " << rep.flagged_cells << " flagged cells";
    }
    std::cout << '\n';
    for (const auto& item : rep.items) {
      if (!out.verbose && item.ok()) continue;
      std::cout << "  " << (item.ok() ? "pass " : "FAIL ") << item.name << " ("
                << item.checks << " checks, worst " << sci(item.worst) << ")";
      if (!item.detail.empty()) std::cout << " " << item.detail;
      std::cout << '\n';
    }
  }
  std::cout << "summary: " << checks << " checks, " << failures
            << " failures, " << flagged << " flagged cells\n";
  return failures == 0 ? kOk : kFailed;
}

int cmd_lhs(const FunctionalArgs& fa, std::optional<double> alpha_value,
            const std::string& profile_path, const std::vector<double>& radii,
            const OutputArgs& out) {
  Functional f = fa.build();
  std::optional<CoefficientProfile> profile;
  if (!profile_path.empty()) {
    std::ifstream in(profile_path);
    if (!in) throw Usage("cannot open profile '" + profile_path + "'");
    try {
      profile = read_profile(in);
    } catch (const ProfileError& e) {
      throw Usage(e.what());
    }
  } else if (alpha_value) {
    profile = extremal_profile(make_alpha(*alpha_value));
  } else {
    throw Usage("lhs needs --alpha or --profile");
  }
  const int prec = out.resolve_precision();

  header(f);
  std::cout << "# alpha=" << alpha_text(profile->alpha().value())
            << (profile->is_extremal() ? " extremal" : " profile") << '\n';
  std::cout << "r,closed,series,tail_bound\n";
  for (double r : radii) {
    std::cout << alpha_text(r) << ',' << fixed(lhs_closed(f, *profile, r), prec);
    if (r <= kOracleMaxRadius) {
      const auto s = lhs_series(f, *profile, r);
      std::cout << ',' << fixed(s.value, prec) << ',' << sci(s.tail_bound);
    } else {
      std::cout << ",,";
    }
    std::cout << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bohr radii of the close-to-convex harmonic class"};
  app.require_subcommand(1);

  auto* radius = app.add_subcommand("radius", "smallest root for one alpha");
  FunctionalArgs radius_f;
  OutputArgs radius_out;
  SolverArgs radius_s;
  double radius_alpha = 0.0;
  radius_f.attach(radius);
  radius->add_option("--alpha", radius_alpha, "order alpha in [0,1)")->required();
  radius_out.attach(radius, "plain");
  radius_s.attach(radius);

  auto* table = app.add_subcommand("table", "reproduce a published table");
  std::string table_id, table_variant;
  OutputArgs table_out;
  SolverArgs table_s;
  table->add_option("--id", table_id, "T1, T2, T4..T8 or TR")->required();
  table->add_option("--variant", table_variant, "override the table binding");
  table_out.attach(table, "plain");
  table_s.attach(table);

  auto* curve = app.add_subcommand("curve", "roots over an alpha range");
  FunctionalArgs curve_f;
  OutputArgs curve_out;
  SolverArgs curve_s;
  double from = 0.0, to = 0.0, step = 0.1;
  curve_f.attach(curve);
  curve->add_option("--alpha-from", from)->required();
  curve->add_option("--alpha-to", to)->required();
  curve->add_option("--step", step);
  curve_out.attach(curve, "csv");
  curve_s.attach(curve);

  auto* check = app.add_subcommand("check", "run verification suites");
  std::vector<std::string> suites;
  bool all = false;
  std::string grid = "full";
  OutputArgs check_out;
  check->add_option("--suite", suites, "identities | oracle | sharpness | "
                                       "monotonicity | tables | discrepancy");
  check->add_flag("--all", all, "run every suite");
  check->add_option("--grid", grid)->check(CLI::IsMember({"coarse", "full"}));
  check_out.attach(check, "plain");

  auto* lhs = app.add_subcommand("lhs", "left-hand side values at given radii");
  FunctionalArgs lhs_f;
  OutputArgs lhs_out;
  std::optional<double> lhs_alpha;
  std::string profile_path;
  std::vector<double> radii;
  lhs_f.attach(lhs);
  lhs->add_option("--alpha", lhs_alpha, "extremal profile of this order");
  lhs->add_option("--profile", profile_path, "coefficient profile file");
  lhs->add_option("--r", radii, "radii in [0, 1)")->required();
  lhs_out.attach(lhs, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*radius) return cmd_radius(radius_f, radius_alpha, radius_out, radius_s);
    if (*table) return cmd_table(table_id, table_variant, table_out, table_s);
    if (*curve) return cmd_curve(curve_f, from, to, step, curve_out, curve_s);
    if (*check) return cmd_check(suites, all, grid, check_out);
    if (*lhs) return cmd_lhs(lhs_f, lhs_alpha, profile_path, radii, lhs_out);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SolverError& e) {
    std::cerr << "solver: " << e.what() << '\n';
    return kSolver;
  } catch (const BudgetExceeded& e) {
    std::cerr << "solver: " << e.what() << '\n';
    return kSolver;
  } catch (const std::invalid_argument& e) {
    // DomainError, UnsupportedCombination, ProfileError
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
