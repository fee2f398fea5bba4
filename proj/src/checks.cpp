#include "bohr/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bohr/errors.hpp"
#include "bohr/format.hpp"
#include "bohr/kernel.hpp"
#include "bohr/model.hpp"
#include "bohr/tables.hpp"

namespace bohr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

void record(CheckItem& item, double error, double limit) {
  ++item.checks;
  item.worst = std::max(item.worst, error);
  if (!(error <= limit)) ++item.failures;
}

void expect(CheckItem& item, bool condition) {
  ++item.checks;
  if (!condition) ++item.failures;
}

double grid_point(int k, double step) { return std::round(k * step * 1e6) / 1e6; }

SuiteReport identities() {
  SuiteReport rep;

  CheckItem ln2{"distance_bound(0.5) = ln 2"};
  record(ln2, std::fabs(distance_bound(Alpha(0.5)) - kLn2), 1e-12);
  rep.items.push_back(ln2);

  CheckItem edge{"minorant(1, alpha) = distance_bound(alpha)"};
  for (double a : alpha_grid()) {
    record(edge, std::fabs(minorant(1.0, Alpha(a)) - distance_bound(Alpha(a))),
           1e-12);
  }
  rep.items.push_back(edge);

  CheckItem refl{"dilog reflection"};
  for (int k = 1; k <= 9; ++k) {
    const double r = grid_point(k, 0.1);
    const double lhs = dilog(r) + dilog(1.0 - r);
    const double rhs = kPi * kPi / 6.0 - std::log(r) * std::log(1.0 - r);
    record(refl, std::fabs(lhs - rhs), 1e-10);
  }
  rep.items.push_back(refl);

  CheckItem tails{"log_tail against truncated_sum"};
  CheckItem decreasing{"log_tail decreasing in N"};
  CheckItem alt{"alt_log_tail closed form"};
  for (int k = 1; k <= 19; ++k) {
    const double r = grid_point(k, 0.05);
    for (int n = 1; n <= 10; ++n) {
      const auto s = truncated_sum(
          GeometricSeries{[r](int j) { return std::pow(r, j) / j; }, n,
                          1.0 / n, r},
          TruncationBudget{1e-13, 200000});
      record(tails, std::fabs(log_tail(n, r) - s.value), 1e-10);
      if (n > 1) expect(decreasing, log_tail(n, r) < log_tail(n - 1, r));
    }
    record(alt, std::fabs(alt_log_tail(r) + r - std::log1p(r)), 1e-12);
  }
  rep.items.push_back(tails);
  rep.items.push_back(decreasing);
  rep.items.push_back(alt);

  CheckItem growth{"majorant closed form against series"};
  CheckItem order{"minorant < majorant"};
  for (double a : alpha_grid()) {
    const Alpha alpha(a);
    const double c = 2.0 * alpha.complement();
    for (int k = 1; k <= 19; ++k) {
      const double r = grid_point(k, 0.05);
      auto s = truncated_sum(
          GeometricSeries{[r, c](int j) { return c / j * std::pow(r, j); }, 2,
                          c / 2.0, r});
      record(growth, std::fabs(majorant(r, alpha) - (r + s.value)), 1e-10);
      expect(order, minorant(r, alpha) < majorant(r, alpha));
    }
  }
  rep.items.push_back(growth);
  rep.items.push_back(order);

  CheckItem coeff{"coeff_bound decreasing in n and alpha"};
  for (int n = 2; n <= 30; ++n) {
    for (int k = 0; k < 9; ++k) {
      const Alpha a(grid_point(k, 0.1));
      const Alpha b(grid_point(k + 1, 0.1));
      expect(coeff, coeff_bound(n + 1, a) < coeff_bound(n, a));
      expect(coeff, coeff_bound(n, b) < coeff_bound(n, a));
    }
  }
  rep.items.push_back(coeff);
  return rep;
}

SuiteReport oracle(Grid grid) {
  SuiteReport rep;
  const auto radii = radius_grid(grid);
  for (Kind kind : kAllKinds) {
    CheckItem item{"oracle " + std::string(kind_name(kind))};
    for (const auto& f : variant_catalog()) {
      if (f.kind != kind) continue;
      for (double a : alpha_grid()) {
        const auto profile = extremal_profile(Alpha(a));
        for (double r : radii) {
          const auto s = lhs_series(f, profile, r);
          const double gap = std::fabs(lhs_closed(f, profile, r) - s.value);
          record(item, gap - s.tail_bound, 1e-10);
        }
      }
    }
    rep.items.push_back(item);
  }
  return rep;
}

std::vector<Functional> solvable_set() {
  // Proof variants, plus the default where the default differs.
  std::vector<Functional> out;
  for (const auto& f : standard_catalog()) {
    out.push_back(f.with(Variant::kProof));
    if (f.variant != Variant::kProof) out.push_back(f);
  }
  return out;
}

SuiteReport sharpness() {
  SuiteReport rep;
  const auto set = solvable_set();
  for (Kind kind : kAllKinds) {
    CheckItem item{"sharpness " + std::string(kind_name(kind))};
    CheckItem exists{"root existence " + std::string(kind_name(kind))};
    for (const auto& f : set) {
      if (f.kind != kind) continue;
      for (double a : alpha_grid()) {
        const RadiusEquation eq(f, Alpha(a));
        expect(exists, eq.residual(1e-6) < 0.0 && eq.residual(1.0 - 1e-6) > 0.0);
        try {
          const auto root = solve(eq);
          record(item, std::fabs(eq.lhs(root.root) - eq.distance()), 1e-8);
        } catch (const SolverError& e) {
          record(item, INFINITY, 1e-8);
          item.detail = f.describe() + ": " + e.what();
        }
      }
    }
    rep.items.push_back(item);
    rep.items.push_back(exists);
  }
  return rep;
}

SuiteReport monotonicity() {
  SuiteReport rep;
  CheckItem lhs{"lhs_closed increasing in r"};
  CheckItem roots{"roots increasing in alpha"};
  for (const auto& f : solvable_set()) {
    for (double a : alpha_grid()) {
      const auto profile = extremal_profile(Alpha(a));
      double prev = lhs_closed(f, profile, 0.0);
      for (int k = 1; k <= 99; ++k) {
        const double v = lhs_closed(f, profile, grid_point(k, 0.01));
        expect(lhs, v > prev);
        prev = v;
      }
    }
  }
  for (const auto& f : solvable_set()) {
    double prev = 0.0;
    for (int k = 1; k <= 9; ++k) {
      const double root = solve(radius_equation(f, Alpha(grid_point(k, 0.1)))).root;
      expect(roots, root > prev);
      if (!(root > prev)) roots.detail = f.describe();
      prev = root;
    }
  }
  rep.items.push_back(lhs);
  rep.items.push_back(roots);
  return rep;
}

SuiteReport tables_suite() {
  SuiteReport rep;
  for (const auto& t : registry()) {
    const auto report = reproduce(t);
    CheckItem item{"table " + t.id};
    item.checks = static_cast<long>(report.cells.size());
    item.failures = report.failed;
    for (const auto& c : report.cells) {
      if (c.status != CellStatus::kFlag) item.worst = std::max(item.worst, c.diff);
    }
    if (report.flagged > 0) {
      item.detail = std::to_string(report.flagged) + " flagged";
    }
    rep.flagged_cells += report.flagged;
    rep.items.push_back(item);

    CheckItem flags{"flagged cells deviate " + t.id};
    for (const auto& c : report.cells) {
      if (c.status == CellStatus::kFlag) expect(flags, c.diff > kTableTolerance);
    }
    if (flags.checks > 0) rep.items.push_back(flags);
  }
  return rep;
}

double root_of(const Functional& f, double alpha) {
  return solve(radius_equation(f, Alpha(alpha))).root;
}

CheckItem divergence(const std::string& name, const Functional& a,
                     const Functional& b, double alpha, double min_gap) {
  CheckItem item{name};
  const double gap = std::fabs(root_of(a, alpha) - root_of(b, alpha));
  item.worst = gap;
  expect(item, gap > min_gap);
  item.detail = a.describe() + " vs " + b.describe() + " at alpha=" +
                fixed(alpha, 1) + ": gap " + sci(gap);
  return item;
}

SuiteReport discrepancy() {
  SuiteReport rep;
  const auto sq3 = Functional::rogosinski_squared(3);
  rep.items.push_back(divergence("rogosinski-squared(N=3) statement vs proof",
                                 sq3.with(Variant::kStatement),
                                 sq3.with(Variant::kProof), 0.1, 1e-3));
  {
    CheckItem item{"only the proof variant gives 0.4102"};
    expect(item, std::fabs(root_of(sq3.with(Variant::kProof), 0.1) - 0.4102) <=
                     kTableTolerance);
    expect(item, std::fabs(root_of(sq3.with(Variant::kStatement), 0.1) -
                           0.4102) > kTableTolerance);
    rep.items.push_back(item);
  }

  const auto sc = Functional::squared_coefficients();
  rep.items.push_back(divergence("squared-coefficients statement vs proof",
                                 sc.with(Variant::kStatement),
                                 sc.with(Variant::kProof), 0.5, 1e-3));

  const auto al = Functional::area_linear();
  rep.items.push_back(divergence("area-linear vs P(w) = w",
                                 al.with(Variant::kStatement),
                                 al.with(Variant::kProof), 0.1, 5e-3));
  {
    // Degree N-1 with N = 2 is the P(w) = w reading again.
    CheckItem item{"area-polynomial degree N-1 at N=2 equals P(w) = w"};
    const double a = root_of(al.with(Variant::kProof), 0.1);
    const double b =
        root_of(Functional::area_polynomial(2).with(Variant::kStatement), 0.1);
    record(item, std::fabs(a - b), 1e-10);
    rep.items.push_back(item);
  }

  {
    CheckItem item{"T4 and T5 need different powered-argument variants"};
    const auto t4_alt = reproduce("T4", Variant::kAlternate);
    const auto t4_proof = reproduce("T4", Variant::kProof);
    const auto t5_proof = reproduce("T5", Variant::kProof);
    const auto t5_alt = reproduce("T5", Variant::kAlternate);
    const int n4 = static_cast<int>(t4_alt.cells.size());
    expect(item, t4_alt.within_tolerance() == n4);
    expect(item, t4_proof.within_tolerance() < n4);
    expect(item, t5_proof.within_tolerance() > t5_alt.within_tolerance());
    item.detail = "T4 within 1e-4: alternate " +
                  std::to_string(t4_alt.within_tolerance()) + ", proof " +
                  std::to_string(t4_proof.within_tolerance()) + " of " +
                  std::to_string(n4) + "; T5: proof " +
                  std::to_string(t5_proof.within_tolerance()) + ", alternate " +
                  std::to_string(t5_alt.within_tolerance()) + " of " +
                  std::to_string(t5_proof.cells.size());
    rep.items.push_back(item);
  }

  {
    CheckItem item{"T1 (N=10, alpha=0.3) recomputes near 0.4078"};
    const double r = root_of(Functional::rogosinski(10), 0.3);
    item.worst = r;
    expect(item, r >= 0.4070 && r <= 0.4100);
    item.detail = "recomputed " + fixed(r, 6) + ", printed 0.4978";
    rep.items.push_back(item);
  }

  {
    CheckItem item{"refined-r statement variant is positive near 0"};
    const RadiusEquation eq(Functional::refined_r().with(Variant::kStatement),
                            Alpha(0.1));
    expect(item, eq.residual(1e-3) > 0.0);
    bool rejected = false;
    try {
      solve(eq);
    } catch (const NonNegativeStart&) {
      rejected = true;
    }
    expect(item, rejected);
    rep.items.push_back(item);
  }

  {
    CheckItem item{"analytic-power literal |h(r)|^p misses T6"};
    const auto f = Functional::analytic_power(7);
    const double lit = root_of(f.with(Variant::kAlternate), 0.1);
    expect(item, std::fabs(root_of(f, 0.1) - 0.3249) <= kTableTolerance);
    expect(item, std::fabs(lit - 0.3249) > kTableTolerance);
    item.detail = "literal reading gives " + fixed(lit, 6);
    rep.items.push_back(item);
  }
  return rep;
}

}  // namespace

bool SuiteReport::ok() const {
  return std::all_of(items.begin(), items.end(),
                     [](const CheckItem& i) { return i.ok(); });
}

long SuiteReport::checks() const {
  long n = 0;
  for (const auto& i : items) n += i.checks;
  return n;
}

long SuiteReport::failures() const {
  long n = 0;
  for (const auto& i : items) n += i.failures;
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "identities", "oracle", "sharpness", "monotonicity", "tables",
      "discrepancy"};
  return names;
}

SuiteReport run_suite(const std::string& name, Grid grid) {
  SuiteReport rep;
  if (name == "identities") {
    rep = identities();
  } else if (name == "oracle") {
    rep = oracle(grid);
  } else if (name == "sharpness") {
    rep = sharpness();
  } else if (name == "monotonicity") {
    rep = monotonicity();
  } else if (name == "tables") {
    rep = tables_suite();
  } else if (name == "discrepancy") {
    rep = discrepancy();
  } else {
    throw DomainError("unknown suite '" + name + "'");
  }
  rep.suite = name;
  return rep;
}

std::vector<Functional> standard_catalog() {
  static const int ns[] = {2, 3, 4, 5, 6, 8, 10, 15, 25};
  std::vector<Functional> out;
  for (int n : ns) out.push_back(Functional::rogosinski(n));
  for (int n : ns) out.push_back(Functional::rogosinski_squared(n));
  for (int m : {1, 2, 3, 5, 7, 15}) {
    for (int n : {2, 3, 5}) out.push_back(Functional::powered_argument(m, n));
  }
  for (int p : {1, 2, 3, 5, 7, 10, 20, 35, 50}) {
    out.push_back(Functional::analytic_power(p));
  }
  for (int n : ns) out.push_back(Functional::area_polynomial(n));
  out.push_back(Functional::area_linear());
  out.push_back(Functional::squared_coefficients());
  for (int n : ns) out.push_back(Functional::refined_weighted(n));
  for (int m : {1, 2, 3, 4, 5, 6, 8, 10, 15}) {
    out.push_back(Functional::refined_q(m));
  }
  out.push_back(Functional::refined_r());
  for (int n : ns) out.push_back(Functional::jacobian(n));
  return out;
}

std::vector<Functional> variant_catalog() {
  std::vector<Functional> out;
  for (const auto& f : standard_catalog()) {
    out.push_back(f);
    for (Variant v : {Variant::kStatement, Variant::kProof, Variant::kAlternate}) {
      if (v == f.variant || !supports_variant(f.kind, v)) continue;
      if (v != Variant::kAlternate && variants_coincide(f.kind)) continue;
      out.push_back(f.with(v));
    }
  }
  return out;
}

std::vector<double> alpha_grid() {
  std::vector<double> out;
  for (int k = 0; k <= 9; ++k) out.push_back(grid_point(k, 0.1));
  return out;
}

std::vector<double> radius_grid(Grid grid) {
  std::vector<double> out;
  if (grid == Grid::kCoarse) {
    for (int k = 1; k <= 10; ++k) out.push_back(grid_point(k, 0.09));
  } else {
    for (int k = 1; k <= 18; ++k) out.push_back(grid_point(k, 0.05));
  }
  return out;
}

}  // namespace bohr
