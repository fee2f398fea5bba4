#include "bohr/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bohr/errors.hpp"

namespace bohr {

void TruncationBudget::validate() const {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw DomainError("truncation tolerance must be positive");
  }
  if (max_terms < 2) {
    throw DomainError("truncation budget needs max_terms >= 2");
  }
}

double log_tail(int first_index, double r) {
  if (first_index < 1) {
    throw DomainError("log_tail: first index must be >= 1, got " +
                      std::to_string(first_index));
  }
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("log_tail: r must lie in [0,1)");
  }
  double partial = 0.0;
  double power = 1.0;
  for (int n = 1; n < first_index; ++n) {
    power *= r;
    partial += power / n;
  }
  // Cancellation can push a tiny tail a few ulps below zero.
  return std::max(0.0, -std::log1p(-r) - partial);
}

double alt_log_tail(double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("alt_log_tail: r must lie in [0,1]");
  }
  return std::log1p(r) - r;
}

namespace {

double dilog_series(double r) {
  double sum = 0.0;
  double power = r;
  for (int n = 1; n < 200; ++n) {
    const double term = power / (static_cast<double>(n) * n);
    sum += term;
    if (term <= 1e-18 * sum) break;
    power *= r;
  }
  return sum;
}

}  // namespace

double dilog(double r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("dilog: r must lie in [0,1]");
  }
  constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  if (r == 1.0) return kZeta2;
  if (r <= 0.5) return dilog_series(r);
  const double s = 1.0 - r;
  return kZeta2 - std::log(r) * std::log(s) - dilog_series(s);
}

SeriesResult truncated_sum(const GeometricSeries& series,
                           const TruncationBudget& budget) {
  budget.validate();
  if (!series.term) {
    throw std::invalid_argument("truncated_sum: missing term rule");
  }
  if (!(series.scale >= 0.0) || !std::isfinite(series.scale) ||
      !(series.ratio >= 0.0 && series.ratio < 1.0) || series.first < 0) {
    throw std::invalid_argument(
        "truncated_sum: term rule needs a certificate scale >= 0, ratio in "
        "[0,1)");
  }

  const double denom = 1.0 - series.ratio;
  double certificate = series.scale * std::pow(series.ratio, series.first);
  double sum = 0.0;
  double compensation = 0.0;
  int used = 0;
  int n = series.first;
  for (;;) {
    const double tail = certificate / denom;
    if (tail <= budget.tolerance) {
      return SeriesResult{sum, used, tail};
    }
    if (used >= budget.max_terms) {
      throw BudgetExceeded("truncated_sum: " + std::to_string(used) +
                           " terms used, tail bound still " +
                           std::to_string(tail));
    }
    const double t = series.term(n);
    if (!(t >= 0.0) || t > certificate * (1.0 + 1e-9) + 1e-300) {
      throw std::invalid_argument("truncated_sum: term " + std::to_string(n) +
                                  " is negative or exceeds its certificate");
    }
    // Kahan summation.
    const double y = t - compensation;
    const double s = sum + y;
    compensation = (s - sum) - y;
    sum = s;
    certificate *= series.ratio;
    ++n;
    ++used;
  }
}

}  // namespace bohr
