#include "zzbound/prior.hpp"

#include <cmath>
#include <stdexcept>

namespace zzb {

UniformWindowPrior::UniformWindowPrior(double mu, double w) : mean(mu), width(w) {
  if (!(w > 0.0) || !std::isfinite(w) || !std::isfinite(mu)) {
    throw std::invalid_argument("UniformWindowPrior: width must be finite and > 0");
  }
}

GaussianPrior::GaussianPrior(double mu, double sigma) : mean(mu), std_dev(sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma) || !std::isfinite(mu)) {
    throw std::invalid_argument("GaussianPrior: std_dev must be finite and > 0");
  }
}

double std_dev(const UniformWindowPrior& prior) {
  return prior.width / std::sqrt(12.0);
}

double overlap(const UniformWindowPrior& prior, double gamma) {
  if (!(gamma >= 0.0)) {
    throw std::invalid_argument("overlap: gamma must be >= 0");
  }
  return std::fmax(0.0, 1.0 - gamma / prior.width);
}

double prior_fisher_information(const GaussianPrior& prior) {
  return 1.0 / (prior.std_dev * prior.std_dev);
}

double prior_fisher_information(const UniformWindowPrior&) {
  throw std::domain_error("prior Fisher information undefined for non-smooth prior");
}

}  // namespace zzb
