#include "bohr/solver.hpp"

#include <cmath>
#include <string>

#include "bohr/errors.hpp"
#include "bohr/kernel.hpp"

namespace bohr {

void SolverOptions::validate() const {
  if (!(scan_step > 0.0 && scan_step <= 0.5)) {
    throw DomainError("scan_step must lie in (0, 0.5]");
  }
  if (!(root_tol > 0.0)) throw DomainError("root_tol must be positive");
  if (!(residual_tol >= 0.0)) {
    throw DomainError("residual_tol must be non-negative");
  }
}

namespace {

double evaluate(const std::function<double(double)>& residual, double r) {
  const double g = residual(r);
  if (std::isnan(g)) {
    throw SolverError("residual is NaN at r = " + std::to_string(r));
  }
  return g;
}

}  // namespace

RootResult smallest_root(const std::function<double(double)>& residual,
                         const SolverOptions& options) {
  options.validate();
  const double step = options.scan_step;
  const double g_start = evaluate(residual, step);
  if (options.require_negative_start && g_start >= 0.0) {
    throw NonNegativeStart("residual is already " + std::to_string(g_start) +
                           " >= 0 at r = " + std::to_string(step));
  }
  if (g_start == 0.0) {
    return RootResult{step, step, step, 0.0, 0, true};
  }
  const bool from_below = g_start < 0.0;
  const auto crossed = [from_below](double g) {
    return from_below ? g >= 0.0 : g <= 0.0;
  };

  double lo = step;
  double hi = step;
  for (long k = 2;; ++k) {
    double r = static_cast<double>(k) * step;
    const bool last = r >= kMaxRadius;
    if (last) r = kMaxRadius;
    if (crossed(evaluate(residual, r))) {
      hi = r;
      break;
    }
    if (last) {
      throw NoSignChange("residual keeps its sign on [" +
                         std::to_string(step) + ", 1 - 1e-9]");
    }
    lo = r;
  }

  RootResult result;
  while (hi - lo > options.root_tol) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double g = evaluate(residual, mid);
    ++result.iterations;
    if (g == 0.0) {
      result.root = mid;
      result.lo = lo;
      result.hi = hi;
      result.residual_at_root = g;
      result.converged = true;
      return result;
    }
    if (crossed(g)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  result.lo = lo;
  result.hi = hi;
  result.root = lo + 0.5 * (hi - lo);
  result.residual_at_root = evaluate(residual, result.root);
  result.converged = hi - lo <= options.root_tol ||
                     std::fabs(result.residual_at_root) <= options.residual_tol;
  return result;
}

}  // namespace bohr
