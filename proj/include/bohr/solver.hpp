#pragma once

#include <functional>

namespace bohr {

struct SolverOptions {
  double scan_step = 1e-3;
  double root_tol = 1e-12;
  // Accepts a bracket that stopped shrinking (floating-point limit) when the
  // residual at its midpoint is this small.
  double residual_tol = 1e-10;
  // Radius residuals start negative; a non-negative start means the
  // functional already exceeds the distance at r = scan_step. Turning this
  // off locates the first sign change in either direction.
  bool require_negative_start = true;

  void validate() const;
};

struct RootResult {
  double root = 0.0;
  double lo = 0.0;  // bracket, lo < root < hi
  double hi = 0.0;
  double residual_at_root = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Scans r = k * scan_step upward (the last probe is pinned at 1 - 1e-9) and
// refines the first sign-change bracket by bisection.
RootResult smallest_root(const std::function<double(double)>& residual,
                         const SolverOptions& options = {});

}  // namespace bohr
