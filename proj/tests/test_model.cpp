#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "bohr/errors.hpp"
#include "bohr/kernel.hpp"
#include "bohr/model.hpp"

using namespace bohr;
using doctest::Approx;

TEST_CASE("alpha validation") {
  CHECK_NOTHROW(Alpha(0.0));
  CHECK_NOTHROW(Alpha(0.999));
  CHECK_THROWS_AS(Alpha(1.0), DomainError);
  CHECK_THROWS_AS(Alpha(-0.01), DomainError);
  CHECK_THROWS_AS(Alpha(NAN), DomainError);
  CHECK(Alpha(0.3).complement() == Approx(0.7));
}

TEST_CASE("coeff_bound") {
  CHECK(coeff_bound(2, Alpha(0.0)) == 1.0);
  CHECK(coeff_bound(4, Alpha(0.5)) == 0.25);
  CHECK(coeff_bound(2, Alpha(1.0 - 1e-12)) < 1e-11);
  CHECK_THROWS_AS(coeff_bound(1, Alpha(0.2)), DomainError);
  for (int n = 2; n < 20; ++n) {
    CHECK(coeff_bound(n + 1, Alpha(0.3)) < coeff_bound(n, Alpha(0.3)));
    CHECK(coeff_bound(n, Alpha(0.4)) < coeff_bound(n, Alpha(0.3)));
  }
}

TEST_CASE("distance_bound") {
  CHECK(distance_bound(Alpha(0.5)) == Approx(std::numbers::ln2).epsilon(1e-15));
  CHECK(distance_bound(Alpha(0.0)) == Approx(0.386294361119891).epsilon(1e-14));
  CHECK(distance_bound(Alpha(0.1)) == Approx(0.447664925007902).epsilon(1e-14));
  CHECK(distance_bound(Alpha(1.0 - 1e-12)) == Approx(1.0).epsilon(1e-11));
  double prev = 0.0;
  for (int k = 0; k < 10; ++k) {
    const double d = distance_bound(Alpha(k / 10.0));
    CHECK(d > prev);
    CHECK(d <= 1.0);
    prev = d;
  }
}

TEST_CASE("majorant and minorant") {
  CHECK(majorant(0.0, Alpha(0.4)) == 0.0);
  CHECK(majorant(0.5, Alpha(0.5)) == Approx(std::numbers::ln2).epsilon(1e-14));
  CHECK(minorant(0.0, Alpha(0.4)) == 0.0);
  CHECK(minorant(1.0, Alpha(0.3)) == Approx(0.570406052783923).epsilon(1e-14));
  CHECK(minorant(0.5, Alpha(0.5)) == Approx(0.405465108108164).epsilon(1e-14));
  CHECK_THROWS_AS(majorant(1.0, Alpha(0.1)), DomainError);
  CHECK_THROWS_AS(minorant(1.01, Alpha(0.1)), DomainError);

  for (int a = 0; a < 10; ++a) {
    const Alpha alpha(a / 10.0);
    CHECK(std::fabs(minorant(1.0, alpha) - distance_bound(alpha)) <= 1e-12);
    double prev = 0.0;
    for (int k = 1; k < 20; ++k) {
      const double r = k * 0.05;
      CHECK(minorant(r, alpha) < majorant(r, alpha));
      CHECK(majorant(r, alpha) > prev);
      prev = majorant(r, alpha);
      const double c = 2.0 * alpha.complement();
      const auto s = truncated_sum(
          {[r, c](int n) { return c / n * std::pow(r, n); }, 2, c / 2.0, r});
      CHECK(std::fabs(majorant(r, alpha) - (r + s.value)) <= 1e-10);
    }
  }
}

TEST_CASE("jacobian_sqrt_bound") {
  CHECK(jacobian_sqrt_bound(0.0, Alpha(0.7)) == 1.0);
  CHECK(jacobian_sqrt_bound(0.5, Alpha(0.0)) == Approx(3.0));
  CHECK(jacobian_sqrt_bound(0.5, Alpha(0.5)) == Approx(2.0));
  CHECK_THROWS_AS(jacobian_sqrt_bound(1.0, Alpha(0.5)), DomainError);
}

TEST_CASE("extremal profile") {
  const auto p0 = extremal_profile(Alpha(0.0));
  CHECK(p0.sum_bound(2) == 1.0);
  CHECK(p0.sum_bound(3) == Approx(2.0 / 3.0));
  CHECK(p0.second_coeff().value() == 1.0);
  CHECK(p0.is_extremal());
  const auto p5 = extremal_profile(Alpha(0.5));
  CHECK(p5.sum_bound(2) == 0.5);
  CHECK(p5.second_coeff().value() == 0.5);
  for (int n = 2; n < 50; ++n) CHECK(p5.a_bound(n) == p5.sum_bound(n));
  CHECK_THROWS_AS(p5.sum_bound(1), DomainError);
}

TEST_CASE("profile rows") {
  const Alpha a(0.3);
  SUBCASE("partial rows fall back to the class bound") {
    const auto p = CoefficientProfile::from_rows(a, {{3, 0.2, 0.1}});
    CHECK(p.sum_bound(3) == 0.2);
    CHECK(p.a_bound(3) == 0.1);
    CHECK(p.sum_bound(2) == coeff_bound(2, a));
    CHECK(p.sum_bound(9) == coeff_bound(9, a));
    CHECK_FALSE(p.second_coeff());
    CHECK_FALSE(p.is_extremal());
  }
  SUBCASE("second coefficient comes from row 2") {
    const auto p = CoefficientProfile::from_rows(a, {{2, 0.5, 0.25}});
    CHECK(p.second_coeff().value() == 0.5);
  }
  SUBCASE("saturated rows are extremal") {
    const auto p = CoefficientProfile::from_rows(a, {{2, 0.7, 0.7}, {3, 1.4 / 3, 1.4 / 3}});
    CHECK(p.is_extremal());
  }
  SUBCASE("violations") {
    CHECK_THROWS_AS(CoefficientProfile::from_rows(a, {{2, 0.71, 0.5}}), ProfileError);
    CHECK_THROWS_AS(CoefficientProfile::from_rows(a, {{2, 0.5, 0.6}}), ProfileError);
    CHECK_THROWS_AS(CoefficientProfile::from_rows(a, {{2, -0.1, 0.0}}), ProfileError);
    CHECK_THROWS_AS(CoefficientProfile::from_rows(a, {{1, 0.1, 0.1}}), ProfileError);
    CHECK_THROWS_AS(CoefficientProfile::from_rows(a, {{2, 0.1, 0.1}, {2, 0.1, 0.1}}),
                    ProfileError);
  }
}

TEST_CASE("read_profile") {
  std::istringstream good(
      "# sample\n"
      "alpha=0.3\n"
      "\n"
      "n, c_n, a_n_bound\n"
      "2, 0.6, 0.5\n"
      "4, 0.3, 0.1\n");
  const auto p = read_profile(good);
  CHECK(p.alpha().value() == Approx(0.3));
  CHECK(p.sum_bound(2) == 0.6);
  CHECK(p.a_bound(4) == 0.1);
  CHECK(p.sum_bound(3) == Approx(coeff_bound(3, Alpha(0.3))));
  CHECK(p.second_coeff().value() == 0.6);

  const auto bad = [](const char* text) {
    std::istringstream in(text);
    return read_profile(in);
  };
  CHECK_THROWS_AS(bad("n,c_n,a_n_bound\n2,0.1,0.1\n"), ProfileError);
  CHECK_THROWS_AS(bad("alpha=0.3\n2,0.1,0.1\n"), ProfileError);
  CHECK_THROWS_AS(bad("alpha=0.3\nn,c_n,a_n_bound\n2,0.1\n"), ProfileError);
  CHECK_THROWS_AS(bad("alpha=0.3\nn,c_n,a_n_bound\n2.5,0.1,0.1\n"), ProfileError);
  CHECK_THROWS_AS(bad("alpha=0.3\nn,c_n,a_n_bound\n2,x,0.1\n"), ProfileError);
  CHECK_THROWS_AS(bad("alpha=0.3\nn,c_n,a_n_bound\n2,0.9,0.1\n"), ProfileError);
  CHECK_THROWS_AS(bad("alpha=1.2\nn,c_n,a_n_bound\n"), ProfileError);
  CHECK_THROWS_AS(bad(""), ProfileError);
}
