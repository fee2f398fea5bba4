#include "bohr/functionals.hpp"

#include <array>
#include <cmath>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

constexpr int kMaxParameter = 100000;

struct KindInfo {
  Kind kind;
  std::string_view name;
  bool n;
  bool m;
  bool p;
};

constexpr std::array<KindInfo, 11> kKindInfo{{
    {Kind::kRogosinski, "rogosinski", true, false, false},
    {Kind::kRogosinskiSquared, "rogosinski-squared", true, false, false},
    {Kind::kPoweredArgument, "powered-argument", true, true, false},
    {Kind::kAnalyticPower, "analytic-power", false, false, true},
    {Kind::kAreaPolynomial, "area-polynomial", true, false, false},
    {Kind::kAreaLinear, "area-linear", false, false, false},
    {Kind::kSquaredCoefficients, "squared-coefficients", false, false, false},
    {Kind::kRefinedWeighted, "refined-weighted", true, false, false},
    {Kind::kRefinedQ, "refined-q", false, true, false},
    {Kind::kRefinedR, "refined-r", false, false, false},
    {Kind::kJacobian, "jacobian", true, false, false},
}};

const KindInfo& info(Kind kind) {
  for (const auto& entry : kKindInfo) {
    if (entry.kind == kind) return entry;
  }
  throw std::logic_error("unknown functional kind");
}

// Smallest admissible value of each integer parameter.
int min_n(Kind) { return 2; }
constexpr int kMinM = 1;
constexpr int kMinP = 1;

void check_range(const char* what, int value, int lo) {
  if (value < lo || value > kMaxParameter) {
    throw DomainError(std::string("parameter ") + what + " must lie in [" +
                      std::to_string(lo) + ", " +
                      std::to_string(kMaxParameter) + "], got " +
                      std::to_string(value));
  }
}

Functional build(Kind kind, int n, int m, int p) {
  const auto& k = info(kind);
  if (k.n) check_range("N", n, min_n(kind));
  if (k.m) check_range("m", m, kMinM);
  if (k.p) check_range("p", p, kMinP);
  Functional f;
  f.kind = kind;
  f.n = k.n ? n : 0;
  f.m = k.m ? m : 0;
  f.p = k.p ? p : 0;
  f.variant = default_variant(kind);
  return f;
}

double second_coeff(const Functional& f, const CoefficientProfile& profile) {
  const auto b = profile.second_coeff();
  if (!b) {
    throw UnsupportedCombination(std::string(kind_name(f.kind)) +
                                 " needs |a_2|+|b_2|, which the profile lacks");
  }
  return *b;
}

// w + w^2 + ... + w^degree
double geometric_polynomial(double w, int degree) {
  double sum = 0.0;
  double power = 1.0;
  for (int k = 1; k <= degree; ++k) {
    power *= w;
    sum += power;
  }
  return sum;
}

int area_degree(const Functional& f) {
  return f.variant == Variant::kStatement ? f.n - 1 : f.n;
}

// Running combination of certified partial sums.
struct Accumulator {
  double value = 0.0;
  double tail = 0.0;
  int terms = 0;

  void add(const SeriesResult& s, double weight = 1.0) {
    value += weight * s.value;
    tail += weight * s.tail_bound;
    terms += s.terms_used;
  }
  void add(double exact) { value += exact; }
  SeriesResult result() const { return SeriesResult{value, terms, tail}; }
};

// g(S) for a sum S known up to [value, value + tail], g increasing on [0, inf).
template <class Fn>
SeriesResult apply_increasing(const SeriesResult& s, Fn g) {
  const double v = g(s.value);
  return SeriesResult{v, s.terms_used, g(s.value + s.tail_bound) - v};
}

class Oracle {
 public:
  Oracle(const CoefficientProfile& profile, const TruncationBudget& budget)
      : profile_(profile),
        budget_(budget),
        c_(2.0 * profile.alpha().complement()) {}

  // x + sum_{n>=2} c_n x^n
  SeriesResult majorant(double x) const {
    auto s = sum(
        [this, x](int n) { return profile_.sum_bound(n) * std::pow(x, n); }, 2,
        c_ / 2.0, x);
    s.value += x;
    return s;
  }

  // sum_{n>=first} c_n x^n
  SeriesResult sum_tail(int first, double x) const {
    return sum(
        [this, x](int n) { return profile_.sum_bound(n) * std::pow(x, n); },
        first, c_ / first, x);
  }

  // sum_{n>=first} |a_n| x^n
  SeriesResult a_tail(int first, double x) const {
    return sum(
        [this, x](int n) { return profile_.a_bound(n) * std::pow(x, n); },
        first, c_ / first, x);
  }

  // sum_{n>=2} n c_n |a_n| x^n: the coefficient part of the area series
  // (with x = r^2) since n(|a_n|+|b_n|)(|a_n|-|b_n|) <= n c_n |a_n|.
  SeriesResult area_coefficients(double x) const {
    return sum(
        [this, x](int n) {
          return n * profile_.sum_bound(n) * profile_.a_bound(n) *
                 std::pow(x, n);
        },
        2, c_ * c_ / 2.0, x);
  }

  // sum_{n>=2} n c_n^2 x^n
  SeriesResult weighted_squares(double x) const {
    return sum(
        [this, x](int n) {
          const double cn = profile_.sum_bound(n);
          return n * cn * cn * std::pow(x, n);
        },
        2, c_ * c_ / 2.0, x);
  }

  // sum_{n>=3} n^(m-1) c_n^m x^n
  SeriesResult refined_powers(int m, double x) const {
    return sum(
        [this, m, x](int n) {
          const double cn = profile_.sum_bound(n);
          return std::pow(n * cn, m - 1) * cn * std::pow(x, n);
        },
        3, std::pow(c_, m) / 3.0, x);
  }

  // sum_{n>=2} (c_n + w_n) x^n with w_n <= weight_scale / n^2
  template <class Extra>
  SeriesResult coefficient_plus(Extra extra, double extra_scale,
                                double x) const {
    return sum(
        [this, extra, x](int n) {
          return (profile_.sum_bound(n) + extra(n)) * std::pow(x, n);
        },
        2, c_ / 2.0 + extra_scale / 4.0, x);
  }

  double c() const { return c_; }

 private:
  template <class Rule>
  SeriesResult sum(Rule rule, int first, double scale, double ratio) const {
    return truncated_sum(GeometricSeries{rule, first, scale, ratio}, budget_);
  }

  const CoefficientProfile& profile_;
  TruncationBudget budget_;
  double c_;
};

}  // namespace

std::string_view kind_name(Kind kind) { return info(kind).name; }

std::optional<Kind> parse_kind(std::string_view name) {
  for (const auto& entry : kKindInfo) {
    if (entry.name == name) return entry.kind;
  }
  return std::nullopt;
}

std::string_view variant_name(Variant variant) {
  switch (variant) {
    case Variant::kStatement:
      return "statement";
    case Variant::kProof:
      return "proof";
    case Variant::kAlternate:
      return "alternate";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (Variant v : {Variant::kStatement, Variant::kProof, Variant::kAlternate}) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

Variant default_variant(Kind kind) {
  // The displayed area-linear equation is the one its table reproduces.
  return kind == Kind::kAreaLinear ? Variant::kStatement : Variant::kProof;
}

bool supports_variant(Kind kind, Variant variant) {
  if (variant != Variant::kAlternate) return true;
  return kind == Kind::kPoweredArgument || kind == Kind::kAnalyticPower ||
         kind == Kind::kJacobian;
}

bool variants_coincide(Kind kind) {
  switch (kind) {
    case Kind::kRogosinskiSquared:
    case Kind::kAreaPolynomial:
    case Kind::kAreaLinear:
    case Kind::kSquaredCoefficients:
    case Kind::kRefinedR:
      return false;
    default:
      return true;
  }
}

Functional Functional::rogosinski(int n) {
  return build(Kind::kRogosinski, n, 0, 0);
}
Functional Functional::rogosinski_squared(int n) {
  return build(Kind::kRogosinskiSquared, n, 0, 0);
}
Functional Functional::powered_argument(int m, int n) {
  return build(Kind::kPoweredArgument, n, m, 0);
}
Functional Functional::analytic_power(int p) {
  return build(Kind::kAnalyticPower, 0, 0, p);
}
Functional Functional::area_polynomial(int n) {
  return build(Kind::kAreaPolynomial, n, 0, 0);
}
Functional Functional::area_linear() { return build(Kind::kAreaLinear, 0, 0, 0); }
Functional Functional::squared_coefficients() {
  return build(Kind::kSquaredCoefficients, 0, 0, 0);
}
Functional Functional::refined_weighted(int n) {
  return build(Kind::kRefinedWeighted, n, 0, 0);
}
Functional Functional::refined_q(int m) {
  return build(Kind::kRefinedQ, 0, m, 0);
}
Functional Functional::refined_r() { return build(Kind::kRefinedR, 0, 0, 0); }
Functional Functional::jacobian(int n) {
  return build(Kind::kJacobian, n, 0, 0);
}

Functional Functional::with(Variant v) const {
  if (!supports_variant(kind, v)) {
    throw UnsupportedCombination(std::string(kind_name(kind)) +
                                 " has no '" + std::string(variant_name(v)) +
                                 "' variant");
  }
  Functional copy = *this;
  copy.variant = v;
  return copy;
}

bool Functional::uses_n() const { return info(kind).n; }
bool Functional::uses_m() const { return info(kind).m; }
bool Functional::uses_p() const { return info(kind).p; }

std::string Functional::label() const {
  std::string params;
  const auto append = [&params](const char* key, int value) {
    if (!params.empty()) params += ',';
    params += key;
    params += '=';
    params += std::to_string(value);
  };
  if (uses_m()) append("m", m);
  if (uses_n()) append("N", n);
  if (uses_p()) append("p", p);
  std::string out(kind_name(kind));
  if (!params.empty()) out += "(" + params + ")";
  return out;
}

std::string Functional::describe() const {
  return label() + " variant=" + std::string(variant_name(variant));
}

Functional make_functional(Kind kind, std::optional<int> n,
                           std::optional<int> m, std::optional<int> p,
                           std::optional<Variant> variant) {
  const auto& k = info(kind);
  const auto check = [&k](bool used, const std::optional<int>& value,
                          const char* flag) {
    if (used && !value) {
      throw DomainError(std::string(k.name) + " requires parameter " + flag);
    }
    if (!used && value) {
      throw DomainError(std::string(k.name) + " takes no parameter " + flag);
    }
  };
  check(k.n, n, "N");
  check(k.m, m, "m");
  check(k.p, p, "p");
  Functional f = build(kind, n.value_or(0), m.value_or(0), p.value_or(0));
  if (variant) {
    try {
      f = f.with(*variant);
    } catch (const UnsupportedCombination& e) {
      throw DomainError(e.what());
    }
  }
  return f;
}

double area_bound(double r, Alpha alpha) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("area_bound: r must lie in [0,1)");
  }
  const double w = 2.0 * alpha.complement();
  const double r2 = r * r;
  return r2 - w * w * (r2 + std::log1p(-r2));
}

double lhs_closed(const Functional& f, const CoefficientProfile& profile,
                  double r) {
  if (!(r >= 0.0 && r <= kMaxRadius)) {
    throw DomainError("lhs_closed: r must lie in [0, 1 - 1e-9]");
  }
  const Alpha alpha = profile.alpha();
  const double c = 2.0 * alpha.complement();
  const double c2 = c * c;
  const double maj = majorant(r, alpha);
  const bool statement = f.variant == Variant::kStatement;
  const bool alternate = f.variant == Variant::kAlternate;

  switch (f.kind) {
    case Kind::kRogosinski:
      return maj + c * log_tail(f.n, r);

    case Kind::kRogosinskiSquared: {
      // The displayed equation starts the partial sum at n = 2, which adds
      // an extra 2(1-alpha) r.
      const double tail = log_tail(f.n, r) + (statement ? r : 0.0);
      return maj * maj + c * tail;
    }

    case Kind::kPoweredArgument: {
      const double tail = log_tail(f.n, r) + (alternate ? r : 0.0);
      return majorant(std::pow(r, f.m), alpha) + c * tail;
    }

    case Kind::kAnalyticPower:
      return alternate ? maj + std::pow(maj, f.p) : std::pow(r, f.p) + maj;

    case Kind::kAreaPolynomial:
      return maj + geometric_polynomial(area_bound(r, alpha), area_degree(f));

    case Kind::kAreaLinear:
      if (statement) return r * r + maj + c2 * log_tail(2, r);
      return maj + area_bound(r, alpha);

    case Kind::kSquaredCoefficients: {
      const double a = alpha.value();
      const double weight = statement ? 4.0 * (1.0 - a * a) : c2;
      return maj + weight * (dilog(r) - r);
    }

    case Kind::kRefinedWeighted:
      return maj + c2 / (1.0 - std::pow(r, f.n)) * log_tail(2, r * r);

    case Kind::kRefinedQ: {
      const double b = second_coeff(f, profile);
      const double x = std::pow(r, f.m);
      const double q = 1.0 / (1.0 + b) + x / (1.0 - x);
      return maj + std::pow(c, f.m) * q * log_tail(3, x);
    }

    case Kind::kRefinedR: {
      const double b = second_coeff(f, profile);
      const double denom = 1.0 - b * r;
      const double refine = -b * (1.0 - b) * r / denom;
      double v = r + refine + c * log_tail(3, r);
      if (statement) v += (1.0 - r) / denom;
      return v;
    }

    case Kind::kJacobian: {
      const double j = jacobian_sqrt_bound(r, alpha);
      const double base = maj + c * log_tail(f.n, r);
      return alternate ? base + j * j : base + j * r;
    }
  }
  throw std::logic_error("unhandled functional kind");
}

SeriesResult lhs_series(const Functional& f, const CoefficientProfile& profile,
                        double r, const TruncationBudget& budget) {
  if (!(r >= 0.0 && r <= kOracleMaxRadius)) {
    throw DomainError("lhs_series: r must lie in [0, 0.97]");
  }
  const Oracle oracle(profile, budget);
  const double c = oracle.c();
  const Alpha alpha = profile.alpha();
  const bool statement = f.variant == Variant::kStatement;
  const bool alternate = f.variant == Variant::kAlternate;
  Accumulator acc;

  switch (f.kind) {
    case Kind::kRogosinski:
      acc.add(oracle.majorant(r));
      acc.add(oracle.sum_tail(f.n, r));
      break;

    case Kind::kRogosinskiSquared:
      acc.add(apply_increasing(oracle.majorant(r),
                               [](double v) { return v * v; }));
      acc.add(oracle.a_tail(f.n, r));
      if (statement) acc.add(c * r);
      break;

    case Kind::kPoweredArgument:
      acc.add(oracle.majorant(std::pow(r, f.m)));
      acc.add(oracle.a_tail(f.n, r));
      if (alternate) acc.add(c * r);
      break;

    case Kind::kAnalyticPower:
      if (alternate) {
        acc.add(apply_increasing(oracle.majorant(r), [p = f.p](double v) {
          return v + std::pow(v, p);
        }));
      } else {
        acc.add(std::pow(r, f.p));
        acc.add(oracle.majorant(r));
      }
      break;

    case Kind::kAreaPolynomial: {
      auto area = oracle.area_coefficients(r * r);
      area.value += r * r;
      acc.add(oracle.majorant(r));
      acc.add(apply_increasing(area, [deg = area_degree(f)](double w) {
        return geometric_polynomial(w, deg);
      }));
      break;
    }

    case Kind::kAreaLinear:
      acc.add(oracle.majorant(r));
      if (statement) {
        acc.add(r * r);
        acc.add(oracle.area_coefficients(r));
      } else {
        acc.add(r * r);
        acc.add(oracle.area_coefficients(r * r));
      }
      break;

    case Kind::kSquaredCoefficients: {
      acc.add(r);
      if (statement) {
        const double a = alpha.value();
        const double w = 4.0 * (1.0 - a * a);
        acc.add(oracle.coefficient_plus(
            [w](int n) { return w / (static_cast<double>(n) * n); }, w, r));
      } else {
        acc.add(oracle.coefficient_plus(
            [&profile](int n) {
              const double cn = profile.sum_bound(n);
              return cn * cn;
            },
            c * c, r));
      }
      break;
    }

    case Kind::kRefinedWeighted:
      acc.add(oracle.majorant(r));
      acc.add(oracle.weighted_squares(r * r), 1.0 / (1.0 - std::pow(r, f.n)));
      break;

    case Kind::kRefinedQ: {
      const double b = second_coeff(f, profile);
      const double x = std::pow(r, f.m);
      const double q = 1.0 / (1.0 + b) + x / (1.0 - x);
      acc.add(oracle.majorant(r));
      acc.add(oracle.refined_powers(f.m, x), q);
      break;
    }

    case Kind::kRefinedR: {
      const double b = second_coeff(f, profile);
      const double denom = 1.0 - b * r;
      acc.add(r);
      acc.add(-b * (1.0 - b) * r / denom);
      acc.add(oracle.sum_tail(3, r));
      if (statement) acc.add((1.0 - r) / denom);
      break;
    }

    case Kind::kJacobian: {
      const double j = jacobian_sqrt_bound(r, alpha);
      acc.add(oracle.majorant(r));
      acc.add(oracle.sum_tail(f.n, r));
      acc.add(alternate ? j * j : j * r);
      break;
    }
  }
  return acc.result();
}

RadiusEquation::RadiusEquation(Functional f, Alpha alpha)
    : functional_(f),
      profile_(extremal_profile(alpha)),
      distance_(distance_bound(alpha)) {}

double RadiusEquation::lhs(double r) const {
  return lhs_closed(functional_, profile_, r);
}

RadiusEquation radius_equation(const Functional& f, Alpha alpha) {
  return RadiusEquation(f, alpha);
}

RootResult solve(const RadiusEquation& equation, const SolverOptions& options) {
  return smallest_root([&equation](double r) { return equation.residual(r); },
                       options);
}

}  // namespace bohr
