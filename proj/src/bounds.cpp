#include "zzbound/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "zzbound/quadrature.hpp"

namespace zzb {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Below this z0 the closed forms lose digits (the 0.3125/sqrt(z0) terms
// cancel); both branches switch to series expansions of the integral.
constexpr double kSeriesSwitch = 1e-3;

void require_tol(double tol) {
  if (!(tol > 0.0 && tol <= 1e-3)) {
    throw std::invalid_argument("zz bound: tol must lie in (0, 1e-3]");
  }
}

// 1/2 (1 - sqrt(1 - F^2)) without cancellation for small F.
double error_bracket(double fidelity) {
  const double u = fidelity * fidelity;
  return 0.5 * u / (1.0 + std::sqrt(std::fmax(0.0, 1.0 - u)));
}

double quadrature_value(const UniformWindowPrior& prior,
                        const std::function<double(double)>& bracket,
                        double split, double tol) {
  const double w = prior.width;
  const auto integrand = [&](double g) { return g * (1.0 - g / w) * bracket(g); };
  double integral = 0.0;
  if (split > 0.0 && split < w) {
    integral += integrate_adaptive(integrand, 0.0, split, 0.5 * tol).value;
    integral += integrate_adaptive(integrand, split, w, 0.5 * tol).value;
  } else {
    integral = integrate_adaptive(integrand, 0.0, w, tol).value;
  }
  return std::sqrt(std::fmax(0.0, integral));
}

// dY^2 / W^2 for the linear model at small z0:
// 1/12 - sqrt(z0) sum_k b_k z0^k / ((k + 5/2)(k + 7/2)),
// b_k the Maclaurin coefficients of sqrt(1 - x).
double linear_small_z0(double z0) {
  double bk = 1.0;
  double zk = 1.0;
  double s = 0.0;
  for (int k = 0; k <= 10; ++k) {
    s += bk * zk / ((k + 2.5) * (k + 3.5));
    bk *= (2.0 * k - 1.0) / (2.0 * k + 2.0);
    zk *= z0;
  }
  return 1.0 / 12.0 - std::sqrt(z0) * s;
}

// dY^2 / x0^2 for the cosine model at small z0:
// z0^2/3 + sum_{k>=1} (-1)^k 4^k k z0^{2k+1} / ((k+1)(2k+1)!).
double cosine_small_z0(double z0) {
  double acc = z0 * z0 / 3.0;
  double fourk = 4.0;
  double z2k1 = z0 * z0 * z0;
  double fact = 6.0;  // (2k+1)! at k = 1
  double sign = -1.0;
  for (int k = 1; k <= 6; ++k) {
    acc += sign * fourk * k * z2k1 / ((k + 1.0) * fact);
    sign = -sign;
    fourk *= 4.0;
    z2k1 *= z0 * z0;
    fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
  }
  return acc;
}

}  // namespace

SensitivityBound zz_bound_quadrature(const UniformWindowPrior& prior,
                                     const FidelityModel& model, double tol) {
  require_tol(tol);
  if (!model.eval) throw std::invalid_argument("zz_bound_quadrature: empty model");
  const auto bracket = [&model](double g) { return error_bracket(model(g)); };
  const double value = quadrature_value(prior, bracket, model.cutoff, tol);
  SensitivityBound b;
  b.value = value;
  b.method = BoundMethod::Quadrature;
  b.z0 = model.x0 ? prior.width / (2.0 * *model.x0) : 0.0;
  b.model = model.label;
  return b;
}

SensitivityBound zz_bound_from_distance(const UniformWindowPrior& prior,
                                        const std::function<double(double)>& distance,
                                        double tol, const std::string& label) {
  require_tol(tol);
  if (!distance) throw std::invalid_argument("zz_bound_from_distance: empty distance curve");
  const auto bracket = [&distance](double g) {
    const double d = distance(g);
    if (!(d >= -1e-9 && d <= 1.0 + 1e-9)) {
      throw std::invalid_argument("zz_bound_from_distance: D(gamma) outside [0, 1]");
    }
    return 0.5 * (1.0 - std::fmin(1.0, std::fmax(0.0, d)));
  };
  SensitivityBound b;
  b.value = quadrature_value(prior, bracket, 0.0, tol);
  b.method = BoundMethod::Quadrature;
  b.z0 = 0.0;
  b.model = label;
  return b;
}

SensitivityBound zz_closed_linear(double x0, double width) {
  if (!(x0 > 0.0) || !(width > 0.0)) {
    throw std::invalid_argument("zz_closed_linear: x0 and width must be > 0");
  }
  const double z0 = width / (2.0 * x0);
  double value;
  if (z0 <= kSeriesSwitch) {
    value = width * std::sqrt(linear_small_z0(z0));
  } else if (z0 <= 0.5) {
    const double poly = 15.0 - 14.0 * z0 - 8.0 * z0 * z0 + 16.0 * z0 * z0 * z0;
    const double i = z0 * z0 / 3.0 - poly / 48.0 * std::sqrt((1.0 - z0) / z0) +
                     (0.5 * kPi - std::asin(1.0 - 2.0 * z0)) * (5.0 / 32.0 - 0.25 * z0) / z0;
    value = x0 * std::sqrt(std::fmax(0.0, i));
  } else {
    const double i = (5.0 / 12.0 - kPi / 8.0) - (0.25 - 5.0 * kPi / 64.0) / z0;
    value = x0 * std::sqrt(i);
  }
  return {value, BoundMethod::ClosedFormLinear, z0, "linear"};
}

SensitivityBound zz_closed_cosine(double std_h, double width) {
  if (!(std_h > 0.0) || !(width > 0.0)) {
    throw std::invalid_argument("zz_closed_cosine: std_h and width must be > 0");
  }
  const double x0 = 1.0 / std_h;
  const double z0 = width / (2.0 * x0);
  double value;
  if (z0 <= kSeriesSwitch) {
    value = x0 * std::sqrt(cosine_small_z0(z0));
  } else if (z0 <= 0.25 * kPi) {
    const double i = z0 * z0 / 3.0 + (std::cos(2.0 * z0) - 1.0) / (2.0 * z0) +
                     0.5 * std::sin(2.0 * z0);
    value = x0 * std::sqrt(std::fmax(0.0, i));
  } else {
    const double i = (kPi * kPi / 16.0 - 0.5) - (0.5 - 0.25 * kPi + kPi * kPi * kPi / 96.0) / z0;
    value = x0 * std::sqrt(i);
  }
  return {value, BoundMethod::ClosedFormCosine, z0, "cosine"};
}

SensitivityBound cr_bound(double std_h, double prior_fisher) {
  if (!(std_h >= 0.0)) throw std::invalid_argument("cr_bound: std_h must be >= 0");
  if (!(prior_fisher >= 0.0)) throw std::invalid_argument("cr_bound: Pi must be >= 0");
  const double denom = 4.0 * std_h * std_h + prior_fisher;
  if (!(denom > 0.0)) {
    throw std::invalid_argument("cr_bound: 4 dH^2 + Pi must be > 0");
  }
  return {1.0 / std::sqrt(denom), BoundMethod::CramerRao, 0.0, "cramer-rao"};
}

double zz_linear_lpi_limit(double mean_h) {
  if (!(mean_h > 0.0)) throw std::invalid_argument("zz_linear_lpi_limit: mean_h must be > 0");
  return std::sqrt(5.0 / 12.0 - kPi / 8.0) / mean_h;
}

double zz_cosine_lpi_limit(double std_h) {
  if (!(std_h > 0.0)) throw std::invalid_argument("zz_cosine_lpi_limit: std_h must be > 0");
  return std::sqrt(kPi * kPi / 16.0 - 0.5) / std_h;
}

}  // namespace zzb
