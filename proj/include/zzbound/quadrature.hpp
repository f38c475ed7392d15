#pragma once

#include <functional>
#include <stdexcept>

namespace zzb {

/// Thrown when the adaptive refinement budget is exhausted before the
/// requested tolerance is met.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

/// Deterministic adaptive Simpson quadrature with Richardson error
/// estimate. abs_tol is an absolute tolerance on the integral; local
/// acceptance is proportional to subinterval length, so the per-interval
/// estimates sum to at most abs_tol. The returned value carries the
/// Richardson correction and is typically far more accurate than abs_tol.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    int max_depth = 96);

}  // namespace zzb
