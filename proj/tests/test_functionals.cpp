#include <doctest.h>

#include <cmath>

#include "bohr/checks.hpp"
#include "bohr/errors.hpp"
#include "bohr/functionals.hpp"

using namespace bohr;
using doctest::Approx;

namespace {
// mpmath references
constexpr double kRog2At2771 = 0.447683764313188;   // rogosinski(2), alpha 0.1
constexpr double kRog2At03 = 0.413349887877465;     // rogosinski(2), alpha 0.5
constexpr double kSquaredAtHalf = 0.775387707024958;
constexpr double kArea2At2734 = 0.447541816870258;  // area-polynomial(2), 0.1
constexpr double kAreaBound = 0.0842767583253622;   // area_bound(0.2734, 0.1)

double root(const Functional& f, double alpha) {
  return solve(radius_equation(f, Alpha(alpha))).root;
}
}  // namespace

TEST_CASE("kind and variant names") {
  for (Kind k : kAllKinds) CHECK(parse_kind(kind_name(k)) == k);
  CHECK(kind_name(Kind::kAreaLinear) == "area-linear");
  CHECK_FALSE(parse_kind("bohr"));
  CHECK(parse_variant("proof") == Variant::kProof);
  CHECK_FALSE(parse_variant("both"));
  CHECK(default_variant(Kind::kAreaLinear) == Variant::kStatement);
  CHECK(default_variant(Kind::kRogosinskiSquared) == Variant::kProof);
  CHECK(supports_variant(Kind::kPoweredArgument, Variant::kAlternate));
  CHECK_FALSE(supports_variant(Kind::kRogosinski, Variant::kAlternate));
}

TEST_CASE("functional construction") {
  CHECK(Functional::powered_argument(2, 3).label() == "powered-argument(m=2,N=3)");
  CHECK(Functional::area_linear().label() == "area-linear");
  CHECK(Functional::analytic_power(7).describe() == "analytic-power(p=7) variant=proof");
  CHECK_THROWS_AS(Functional::rogosinski(1), DomainError);
  CHECK_THROWS_AS(Functional::refined_q(0), DomainError);
  CHECK_THROWS_AS(Functional::analytic_power(0), DomainError);
  CHECK_THROWS_AS(Functional::rogosinski(2).with(Variant::kAlternate),
                  UnsupportedCombination);

  CHECK(make_functional(Kind::kRogosinski, 3, {}, {}) == Functional::rogosinski(3));
  CHECK_THROWS_AS(make_functional(Kind::kRogosinski, {}, {}, {}), DomainError);
  CHECK_THROWS_AS(make_functional(Kind::kAreaLinear, 2, {}, {}), DomainError);
  CHECK_THROWS_AS(make_functional(Kind::kPoweredArgument, 2, {}, {}), DomainError);
  CHECK(make_functional(Kind::kJacobian, 2, {}, {}, Variant::kAlternate).variant ==
        Variant::kAlternate);
  CHECK_THROWS_AS(make_functional(Kind::kRefinedR, {}, {}, {}, Variant::kAlternate),
                  DomainError);
}

TEST_CASE("area_bound") {
  CHECK(area_bound(0.0, Alpha(0.4)) == 0.0);
  CHECK(area_bound(0.2734, Alpha(0.1)) == Approx(kAreaBound).epsilon(1e-13));
  CHECK(area_bound(0.5, Alpha(1.0 - 1e-9)) == Approx(0.25).epsilon(1e-12));
  CHECK(area_bound(0.5, Alpha(0.3)) >= 0.25);
  CHECK_THROWS_AS(area_bound(1.0, Alpha(0.3)), DomainError);
}

TEST_CASE("closed forms at reference points") {
  const auto p1 = extremal_profile(Alpha(0.1));
  const auto p5 = extremal_profile(Alpha(0.5));
  CHECK(lhs_closed(Functional::rogosinski(2), p1, 0.2771) ==
        Approx(kRog2At2771).epsilon(1e-13));
  CHECK(lhs_closed(Functional::rogosinski(2), p5, 0.3) ==
        Approx(kRog2At03).epsilon(1e-13));
  CHECK(lhs_closed(Functional::squared_coefficients(), p5, 0.5) ==
        Approx(kSquaredAtHalf).epsilon(1e-13));
  CHECK(lhs_closed(Functional::area_polynomial(2), p1, 0.2734) ==
        Approx(kArea2At2734).epsilon(1e-13));

  // 0.2734 is the correctly rounded root: the crossing lies in its
  // rounding interval.
  const double d = distance_bound(Alpha(0.1));
  CHECK(lhs_closed(Functional::area_polynomial(2), p1, 0.27335) < d);
  CHECK(lhs_closed(Functional::area_polynomial(2), p1, 0.27345) > d);
}

TEST_CASE("series oracle matches closed forms") {
  const auto p5 = extremal_profile(Alpha(0.5));
  const auto s = lhs_series(Functional::rogosinski(2), p5, 0.3);
  CHECK(std::fabs(s.value - kRog2At03) <= s.tail_bound + 1e-10);
  const auto q = lhs_series(Functional::squared_coefficients(), p5, 0.5);
  CHECK(std::fabs(q.value - kSquaredAtHalf) <= q.tail_bound + 1e-10);

  for (const auto& f : variant_catalog()) {
    for (double a : {0.0, 0.45, 0.9}) {
      const auto p = extremal_profile(Alpha(a));
      for (double r : {0.0, 0.2, 0.6, 0.97}) {
        const auto v = lhs_series(f, p, r);
        CHECK(std::fabs(v.value - lhs_closed(f, p, r)) <= v.tail_bound + 1e-10);
      }
    }
  }
  CHECK_THROWS_AS(lhs_series(Functional::rogosinski(2), p5, 0.98), DomainError);
  CHECK_THROWS_AS(lhs_closed(Functional::rogosinski(2), p5, 1.0), DomainError);
}

TEST_CASE("zero and degenerate radii") {
  for (const auto& f : standard_catalog()) {
    CHECK(lhs_closed(f, extremal_profile(Alpha(0.3)), 0.0) == 0.0);
  }
  const auto flat = extremal_profile(Alpha(1.0 - 1e-12));
  for (double r : {0.1, 0.5, 0.9}) {
    CHECK(lhs_closed(Functional::rogosinski(3), flat, r) == Approx(r).epsilon(1e-9));
  }
}

TEST_CASE("m = 1 powered argument is the rogosinski sum") {
  const auto p = extremal_profile(Alpha(0.2));
  for (double r : {0.1, 0.4, 0.8}) {
    CHECK(lhs_closed(Functional::powered_argument(1, 4), p, r) ==
          Approx(lhs_closed(Functional::rogosinski(4), p, r)).epsilon(1e-14));
  }
  CHECK(root(Functional::powered_argument(1, 4), 0.2) ==
        Approx(root(Functional::rogosinski(4), 0.2)).epsilon(1e-12));
}

TEST_CASE("non-extremal profiles") {
  const Alpha a(0.3);
  const auto p = CoefficientProfile::from_rows(a, {{2, 0.3, 0.2}, {3, 0.1, 0.0}});
  for (const auto& f : variant_catalog()) {
    for (double r : {0.2, 0.5, 0.8}) {
      const auto s = lhs_series(f, p, r);
      CHECK(s.value <= lhs_closed(f, p, r) + 1e-12);
    }
  }
  CHECK(lhs_series(Functional::rogosinski(2), p, 0.5).value <
        lhs_closed(Functional::rogosinski(2), p, 0.5) - 1e-3);

  const auto no_second = CoefficientProfile::from_rows(a, {{3, 0.1, 0.1}});
  CHECK_THROWS_AS(lhs_closed(Functional::refined_r(), no_second, 0.4),
                  UnsupportedCombination);
  CHECK_THROWS_AS(lhs_series(Functional::refined_q(2), no_second, 0.4),
                  UnsupportedCombination);
  CHECK_NOTHROW(lhs_closed(Functional::rogosinski(2), no_second, 0.4));
}

TEST_CASE("radius equations at printed radii") {
  const auto eq = radius_equation(Functional::rogosinski(2), Alpha(0.1));
  CHECK(eq.distance() == Approx(distance_bound(Alpha(0.1))));
  // The residual changes sign within 1e-4 of each printed radius.
  const auto brackets = [](const Functional& f, double alpha, double r) {
    const auto e = radius_equation(f, Alpha(alpha));
    return e.residual(r - 1e-4) < 0.0 && e.residual(r + 1e-4) > 0.0;
  };
  CHECK(brackets(Functional::rogosinski(2), 0.1, 0.2771));
  CHECK(brackets(Functional::refined_weighted(2), 0.1, 0.3148));
  CHECK(brackets(Functional::area_linear(), 0.1, 0.2322));
  CHECK(std::fabs(eq.residual(0.2771)) <= 1e-4);
  CHECK(eq.residual(1e-6) < 0.0);
  CHECK(eq.residual(1.0 - 1e-6) > 0.0);
}

TEST_CASE("variant divergence") {
  const auto f = Functional::rogosinski_squared(3);
  const double proof = root(f.with(Variant::kProof), 0.1);
  const double statement = root(f.with(Variant::kStatement), 0.1);
  CHECK(proof == Approx(0.4102).epsilon(1e-4 / 0.4102));
  CHECK(std::fabs(proof - statement) > 1e-3);

  const auto g = Functional::refined_r().with(Variant::kStatement);
  CHECK(radius_equation(g, Alpha(0.1)).residual(1e-3) > 0.0);
  CHECK_THROWS_AS(solve(radius_equation(g, Alpha(0.1))), NonNegativeStart);
}
