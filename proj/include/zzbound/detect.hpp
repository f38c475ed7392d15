#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zzbound/states.hpp"

namespace zzb {

/// Search window for the first threshold crossing. The grid is
/// logarithmically spaced, so lo must be > 0.
struct SearchWindow {
  double lo = 1e-8;
  double hi = 6.26;  // just inside 2pi, the fidelity domain
  int grid_points = 10000;
};

/// Outcome of a minimum-detectable-parameter search. Undetectable-in-window
/// is a typed outcome, not an error: some catalog states plateau above the
/// threshold at small separations.
struct DetectabilityResult {
  bool detectable = false;
  double gamma_m = 0.0;  // valid only when detectable
  double threshold = 0.5;
  double mean_photons = 0.0;
  long repeats = 1;
  double total_photons = 0.0;  // N_T = M <n>
  std::string state;
  SearchWindow window;
};

/// First gamma in [lo, hi] with f(gamma) <= threshold: log-grid bracketing
/// followed by bisection to relative precision 1e-6. Requires
/// f(lo) > threshold. Returns nullopt when no crossing exists in the window.
std::optional<double> first_threshold_crossing(const std::function<double(double)>& f,
                                               double threshold, const SearchWindow& window);

/// Minimum detectable separation for a catalog state at the given threshold.
DetectabilityResult min_detectable(const StateFamily& state, double threshold,
                                   const SearchWindow& window = {});

/// Same search against the M-fold fidelity F^M; also reports N_T = M <n>.
DetectabilityResult repeated_measurement_detect(const StateFamily& state, long m,
                                                double threshold,
                                                const SearchWindow& window = {});

struct FloorCheck {
  bool pass = false;
  double product = 0.0;  // gamma_m * <n>
  double floor = 0.1;
};

/// Heisenberg floor gamma_m <n> >= c_floor; c_floor defaults to 0.1,
/// an order-one slack below the 1/<H> bound.
FloorCheck heisenberg_floor_check(const DetectabilityResult& result, double floor = 0.1);

/// Least-squares line through (log x, log y); alpha is minus the slope.
struct LogLogFit {
  double alpha = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LogLogFit log_log_fit(const std::vector<std::pair<double, double>>& points);

/// Least-squares fit of log gamma_m against log <n>; alpha is minus the
/// slope. Points the search cannot detect are dropped and recorded.
struct ScalingFit {
  double alpha = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::vector<std::pair<double, double>> points;  // (nbar, gamma_m)
  std::vector<double> dropped;                    // nbar of undetectable sweep points
};

ScalingFit scaling_exponent(const std::function<StateFamily(double)>& family,
                            const std::vector<double>& nbar_sweep, double threshold,
                            const SearchWindow& window = {});

}  // namespace zzb
