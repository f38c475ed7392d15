#include "zzbound/detect.hpp"

#include <cmath>
#include <stdexcept>

namespace zzb {

namespace {

void validate_inputs(double threshold, const SearchWindow& w) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw std::invalid_argument("detect: threshold must lie in (0, 1)");
  }
  if (!(w.lo > 0.0 && w.hi > w.lo)) {
    throw std::invalid_argument("detect: window requires 0 < lo < hi");
  }
  if (w.grid_points < 2) {
    throw std::invalid_argument("detect: grid must have at least 2 points");
  }
}

}  // namespace

std::optional<double> first_threshold_crossing(const std::function<double(double)>& f,
                                               double threshold, const SearchWindow& w) {
  validate_inputs(threshold, w);
  if (!(f(w.lo) > threshold)) {
    throw std::invalid_argument("detect: fidelity at window start is already <= threshold");
  }
  const double ratio = std::pow(w.hi / w.lo, 1.0 / (w.grid_points - 1));
  double lo = w.lo;
  double hi = lo;
  bool bracketed = false;
  for (int i = 1; i < w.grid_points; ++i) {
    hi = (i == w.grid_points - 1) ? w.hi : w.lo * std::pow(ratio, i);
    if (f(hi) <= threshold) {
      bracketed = true;
      break;
    }
    lo = hi;
  }
  if (!bracketed) return std::nullopt;
  // bisect to relative precision 1e-6, keeping f(lo) > threshold >= f(hi)
  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) <= threshold) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

DetectabilityResult min_detectable(const StateFamily& state, double threshold,
                                   const SearchWindow& window) {
  const auto crossing = first_threshold_crossing(
      [&state](double g) { return state.fidelity(g); }, threshold, window);
  DetectabilityResult r;
  r.detectable = crossing.has_value();
  r.gamma_m = crossing.value_or(0.0);
  r.threshold = threshold;
  r.mean_photons = state.mean_photon();
  r.repeats = state.repeats();
  r.total_photons = static_cast<double>(state.repeats()) * r.mean_photons;
  r.state = state.label();
  r.window = window;
  return r;
}

DetectabilityResult repeated_measurement_detect(const StateFamily& state, long m,
                                                double threshold,
                                                const SearchWindow& window) {
  return min_detectable(state.with_repeats(m), threshold, window);
}

FloorCheck heisenberg_floor_check(const DetectabilityResult& result, double floor) {
  if (!result.detectable) {
    throw std::invalid_argument("heisenberg_floor_check: result has no gamma_m");
  }
  FloorCheck c;
  c.product = result.gamma_m * result.mean_photons;
  c.floor = floor;
  c.pass = c.product >= floor;
  return c;
}

LogLogFit log_log_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) {
    throw std::invalid_argument("log_log_fit: need at least 2 points");
  }
  const auto n = static_cast<double>(points.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [px, py] : points) {
    if (!(px > 0.0 && py > 0.0)) {
      throw std::invalid_argument("log_log_fit: points must be positive");
    }
    const double x = std::log(px);
    const double y = std::log(py);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double ssxx = sxx - sx * sx / n;
  const double ssyy = syy - sy * sy / n;
  const double ssxy = sxy - sx * sy / n;
  if (!(ssxx > 0.0)) {
    throw std::invalid_argument("log_log_fit: degenerate abscissae");
  }
  const double slope = ssxy / ssxx;
  LogLogFit fit;
  fit.alpha = -slope;
  fit.intercept = (sy - slope * sx) / n;
  fit.r_squared = ssyy > 0.0 ? (ssxy * ssxy) / (ssxx * ssyy) : 1.0;
  return fit;
}

ScalingFit scaling_exponent(const std::function<StateFamily(double)>& family,
                            const std::vector<double>& nbar_sweep, double threshold,
                            const SearchWindow& window) {
  if (nbar_sweep.size() < 5) {
    throw std::invalid_argument("scaling_exponent: need at least 5 sweep points");
  }
  ScalingFit fit;
  for (double nbar : nbar_sweep) {
    const StateFamily st = family(nbar);
    const DetectabilityResult r = min_detectable(st, threshold, window);
    if (r.detectable) {
      fit.points.emplace_back(nbar, r.gamma_m);
    } else {
      fit.dropped.push_back(nbar);
    }
  }
  if (fit.points.size() < 2) {
    throw std::runtime_error("scaling_exponent: fewer than 2 detectable sweep points");
  }
  const LogLogFit line = log_log_fit(fit.points);
  fit.alpha = line.alpha;
  fit.intercept = line.intercept;
  fit.r_squared = line.r_squared;
  return fit;
}

}  // namespace zzb
