#pragma once

#include <functional>

namespace bohr {

// Largest argument at which series and closed forms are evaluated; both have
// a logarithmic singularity at r = 1.
inline constexpr double kMaxRadius = 1.0 - 1e-9;

struct TruncationBudget {
  double tolerance = 1e-13;  // absolute bound on the omitted tail
  int max_terms = 200000;

  // Throws DomainError unless tolerance > 0 and max_terms >= 2.
  void validate() const;
};

struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;
  double tail_bound = 0.0;  // certified bound on |true sum - value|
};

// A non-negative term rule t(n), n >= first, together with the certificate
//   t(n) <= scale * ratio^n   for every n >= first,
// which bounds the tail after index K by scale * ratio^K / (1 - ratio).
struct GeometricSeries {
  std::function<double(int)> term;
  int first = 1;
  double scale = 0.0;
  double ratio = 0.0;
};

// sum_{n>=N} r^n / n = -ln(1-r) - sum_{n=1}^{N-1} r^n / n.
double log_tail(int first_index, double r);

// sum_{n>=2} (-1)^(n-1) r^n / n = ln(1+r) - r, for r in [0,1].
double alt_log_tail(double r);

// Li_2(r) for r in [0,1]. Direct series on [0, 1/2], reflection above.
double dilog(double r);

// Sums the rule until the certified tail is below budget.tolerance.
// Throws BudgetExceeded when max_terms is reached first, and
// std::invalid_argument for a missing or violated certificate.
SeriesResult truncated_sum(const GeometricSeries& series,
                           const TruncationBudget& budget = {});

}  // namespace bohr
