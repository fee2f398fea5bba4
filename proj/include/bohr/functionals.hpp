#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bohr/kernel.hpp"
#include "bohr/model.hpp"
#include "bohr/solver.hpp"

namespace bohr {

// The eleven Bohr-type functionals of the close-to-convex class.
enum class Kind {
  kRogosinski,           // |f| + sum_{n>=N} (|a_n|+|b_n|) r^n
  kRogosinskiSquared,    // |f|^2 + sum_{n>=N} |a_n| r^n
  kPoweredArgument,      // |f(z^m)| + sum_{n>=N} |a_n| r^n
  kAnalyticPower,        // r + |h(r)|^p + sum_{n>=2} (|a_n|+|b_n|) r^n
  kAreaPolynomial,       // majorant + P(S_r/pi), P(w) = w^N + ... + w
  kAreaLinear,           // majorant + S_r/pi
  kSquaredCoefficients,  // r + sum (|a_n|+|b_n| + (|a_n|+|b_n|)^2) r^n
  kRefinedWeighted,      // majorant + sum n (|a_n|+|b_n|)^2 r^2n / (1-r^N)
  kRefinedQ,             // majorant + Q_m(r) sum_{n>=3} n^(m-1) (...)^m r^mn
  kRefinedR,             // r + R(r) + sum_{n>=3} (|a_n|+|b_n|) r^n
  kJacobian,             // |f| + sqrt|J_f| r + sum_{n>=N} (|a_n|+|b_n|) r^n
};

inline constexpr Kind kAllKinds[] = {
    Kind::kRogosinski,      Kind::kRogosinskiSquared,
    Kind::kPoweredArgument, Kind::kAnalyticPower,
    Kind::kAreaPolynomial,  Kind::kAreaLinear,
    Kind::kSquaredCoefficients, Kind::kRefinedWeighted,
    Kind::kRefinedQ,        Kind::kRefinedR,
    Kind::kJacobian,
};

// Where a displayed radius equation and its derivation disagree, `kStatement`
// is the displayed equation and `kProof` the derived closed form.
// `kAlternate` is a third reading that only some kinds have:
//   powered-argument  the partial sum without its leading r term
//   analytic-power    |h(r)|^p taken literally instead of r^p
//   jacobian          the squared bound term (alpha + (1-alpha)(1+r)/(1-r))^2
enum class Variant { kStatement, kProof, kAlternate };

std::string_view kind_name(Kind kind);
std::optional<Kind> parse_kind(std::string_view name);
std::string_view variant_name(Variant variant);
std::optional<Variant> parse_variant(std::string_view name);

// The variant that reproduces the published table for the kind, or the
// proof variant when no table exists.
Variant default_variant(Kind kind);
bool supports_variant(Kind kind, Variant variant);
// Statement and proof readings are the same formula.
bool variants_coincide(Kind kind);

struct Functional {
  Kind kind = Kind::kRogosinski;
  int n = 0;  // truncation index, polynomial degree or weight exponent
  int m = 0;  // argument power or refinement order
  int p = 0;  // power of the analytic part
  Variant variant = Variant::kProof;

  static Functional rogosinski(int n);
  static Functional rogosinski_squared(int n);
  static Functional powered_argument(int m, int n);
  static Functional analytic_power(int p);
  static Functional area_polynomial(int n);
  static Functional area_linear();
  static Functional squared_coefficients();
  static Functional refined_weighted(int n);
  static Functional refined_q(int m);
  static Functional refined_r();
  static Functional jacobian(int n);

  // Throws UnsupportedCombination for a variant the kind does not have.
  Functional with(Variant v) const;

  bool uses_n() const;
  bool uses_m() const;
  bool uses_p() const;

  // e.g. "powered-argument(m=2,N=2)"
  std::string label() const;
  // label plus " variant=<name>"
  std::string describe() const;

  friend bool operator==(const Functional&, const Functional&) = default;
};

// Builds a functional from loosely supplied parameters (as given on a
// command line). Missing required parameters, parameters the kind does not
// take, and out-of-range values raise DomainError.
Functional make_functional(Kind kind, std::optional<int> n,
                           std::optional<int> m, std::optional<int> p,
                           std::optional<Variant> variant = std::nullopt);

// r^2 - 4(1-alpha)^2 (r^2 + ln(1-r^2)): upper bound on S_r / pi.
double area_bound(double r, Alpha alpha);

// Closed-form left-hand side for r in [0, 1 - 1e-9]. The closed forms use
// the sharp class bounds, so for a non-extremal profile they return the
// class envelope, which dominates lhs_series on that profile. The refined
// kinds read |a_2|+|b_2| from the profile and throw UnsupportedCombination
// when it is absent.
double lhs_closed(const Functional& f, const CoefficientProfile& profile,
                  double r);

// Largest r accepted by the series oracle.
inline constexpr double kOracleMaxRadius = 0.97;

// The same left-hand side summed term by term from the profile's channels,
// with a certified bound on the omitted tail.
SeriesResult lhs_series(const Functional& f, const CoefficientProfile& profile,
                        double r, const TruncationBudget& budget = {});

// G(r) = lhs_closed(f, extremal(alpha), r) - distance_bound(alpha).
class RadiusEquation {
 public:
  RadiusEquation(Functional f, Alpha alpha);

  const Functional& functional() const { return functional_; }
  Alpha alpha() const { return profile_.alpha(); }
  double distance() const { return distance_; }

  double lhs(double r) const;
  double residual(double r) const { return lhs(r) - distance_; }

 private:
  Functional functional_;
  CoefficientProfile profile_;
  double distance_;
};

RadiusEquation radius_equation(const Functional& f, Alpha alpha);

RootResult solve(const RadiusEquation& equation,
                 const SolverOptions& options = {});

}  // namespace bohr
