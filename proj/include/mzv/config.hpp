#pragma once

namespace mzv {

class ConstantCache;

/// Numeric knobs shared by every evaluator.
struct EvalConfig {
  /// Absolute target tolerance.
  double tol = 1e-10;
  /// Outer summation bound for partial-sum routines.
  long cutoff_N = 10000;
  /// Cap on x- and y-series truncation; series stop earlier once the
  /// geometric tail estimate from the last five terms is below tol.
  int taylor_M = 60;
  /// Hurwitz shift; |x| <= 0.6 for Taylor-based routines, x > -1 for sums.
  double x = 0.0;
  /// Polylogarithm argument.
  double t = 0.5;
  /// Highest order at which taylor_hurwitz_coeffs evaluates both routes.
  int cross_check_order = 5;
  /// nullptr selects the process-wide cache.
  ConstantCache* cache = nullptr;

  void validate() const;
};

/// A value with an absolute error estimate.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

}  // namespace mzv
