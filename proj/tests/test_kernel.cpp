#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bohr/errors.hpp"
#include "bohr/kernel.hpp"

using namespace bohr;
using doctest::Approx;

namespace {
// Values frozen from an mpmath evaluation at 30 digits.
constexpr double kLogTail2Half = 0.193147180559945;
constexpr double kAltHalf = -0.0945348918918356;
constexpr double kDilogHalf = 0.582240526465013;
}  // namespace

TEST_CASE("log_tail closed form") {
  CHECK(log_tail(1, 0.5) == Approx(std::numbers::ln2).epsilon(1e-15));
  CHECK(log_tail(3, 0.0) == 0.0);
  CHECK(log_tail(2, 0.5) == Approx(kLogTail2Half).epsilon(1e-14));
  CHECK(log_tail(40, 0.1) >= 0.0);
  CHECK(log_tail(5, 0.3) < log_tail(4, 0.3));
  CHECK(log_tail(5, 0.31) > log_tail(5, 0.3));
}

TEST_CASE("log_tail domain") {
  CHECK_THROWS_AS(log_tail(0, 0.5), DomainError);
  CHECK_THROWS_AS(log_tail(2, 1.0), DomainError);
  CHECK_THROWS_AS(log_tail(2, -0.1), DomainError);
  CHECK_THROWS_AS(log_tail(2, NAN), DomainError);
}

TEST_CASE("alt_log_tail") {
  CHECK(alt_log_tail(0.0) == 0.0);
  CHECK(alt_log_tail(1.0) == Approx(std::numbers::ln2 - 1.0).epsilon(1e-15));
  CHECK(alt_log_tail(0.5) == Approx(kAltHalf).epsilon(1e-14));
  CHECK_THROWS_AS(alt_log_tail(1.5), DomainError);
  CHECK_THROWS_AS(alt_log_tail(-0.5), DomainError);
}

TEST_CASE("dilog") {
  const double pi = std::numbers::pi;
  CHECK(dilog(0.0) == 0.0);
  CHECK(dilog(1.0) == Approx(pi * pi / 6.0).epsilon(1e-15));
  CHECK(dilog(0.5) == Approx(kDilogHalf).epsilon(1e-14));
  const double ln2 = std::numbers::ln2;
  CHECK(dilog(0.5) == Approx(pi * pi / 12.0 - ln2 * ln2 / 2.0).epsilon(1e-14));
  double prev = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double v = dilog(k / 100.0);
    CHECK(v > prev);
    prev = v;
  }
  CHECK_THROWS_AS(dilog(1.01), DomainError);
}

TEST_CASE("truncated_sum") {
  SUBCASE("zero rule") {
    const auto s = truncated_sum({[](int) { return 0.0; }, 1, 0.0, 0.5});
    CHECK(s.value == 0.0);
    CHECK(s.tail_bound == 0.0);
  }
  SUBCASE("log tail") {
    const auto s = truncated_sum(
        {[](int n) { return std::pow(0.5, n) / n; }, 2, 0.5, 0.5}, {1e-12, 1000});
    CHECK(std::fabs(s.value - kLogTail2Half) <= s.tail_bound + 1e-15);
    CHECK(s.tail_bound <= 1e-12);
  }
  SUBCASE("dilog") {
    const auto s = truncated_sum(
        {[](int n) { return std::pow(0.5, n) / (double(n) * n); }, 1, 1.0, 0.5},
        {1e-12, 1000});
    CHECK(s.value == Approx(kDilogHalf).epsilon(1e-11));
  }
  SUBCASE("budget exceeded") {
    CHECK_THROWS_AS(truncated_sum({[](int n) { return std::pow(0.999, n); }, 1,
                                   1.0, 0.999},
                                  {1e-14, 50}),
                    BudgetExceeded);
  }
  SUBCASE("rejects rules without a valid certificate") {
    CHECK_THROWS_AS(truncated_sum({nullptr, 1, 1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(truncated_sum({[](int) { return 1.0; }, 1, 0.1, 0.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(truncated_sum({[](int) { return -1e-3; }, 1, 1.0, 0.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(truncated_sum({[](int) { return 0.0; }, 1, 1.0, 1.0}),
                    std::invalid_argument);
  }
  SUBCASE("budget validation") {
    CHECK_THROWS_AS(TruncationBudget({0.0, 10}).validate(), DomainError);
    CHECK_THROWS_AS(TruncationBudget({1e-10, 1}).validate(), DomainError);
  }
}

TEST_CASE("log_tail agrees with summation on the grid") {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 1; k <= 19; ++k) {
      const double r = k * 0.05;
      const auto s = truncated_sum(
          {[r](int j) { return std::pow(r, j) / j; }, n, 1.0 / n, r});
      CHECK(std::fabs(log_tail(n, r) - s.value) <= 1e-10);
    }
  }
}
