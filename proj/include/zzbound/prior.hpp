#pragma once

namespace zzb {

/// Uniform window prior p(x) = rect((x - mean)/width)/width.
struct UniformWindowPrior {
  double mean = 0.0;
  double width = 1.0;

  UniformWindowPrior(double mu, double w);
};

/// Gaussian prior with mean mu and standard deviation std_dev.
/// Used only for the Cramer-Rao comparison.
struct GaussianPrior {
  double mean = 0.0;
  double std_dev = 1.0;

  GaussianPrior(double mu, double sigma);
};

/// Standard deviation of the window prior, W / sqrt(12).
double std_dev(const UniformWindowPrior& prior);

/// Valley overlap integral int min[p(x), p(x + gamma)] dx for the window
/// prior; evaluates analytically to max(0, 1 - gamma/W). gamma must be >= 0.
double overlap(const UniformWindowPrior& prior, double gamma);

/// Prior Fisher information Pi = int p (d ln p / dx)^2 dx = 1/std_dev^2.
double prior_fisher_information(const GaussianPrior& prior);

/// The window prior's density is discontinuous, so Pi diverges; this
/// overload always throws std::domain_error ("undefined for non-smooth prior").
double prior_fisher_information(const UniformWindowPrior& prior);

}  // namespace zzb
