#pragma once

#include <functional>
#include <optional>
#include <string>

namespace zzb {

enum class ModelKind { LinearBound, CosineBound, StateExact };

/// A fidelity-vs-separation function F(gamma) in [0, 1] with F(0) = 1 and
/// an optional hard support cutoff gamma_c (F = 0 for gamma >= gamma_c).
struct FidelityModel {
  ModelKind kind = ModelKind::StateExact;
  double cutoff = 0.0;  // gamma_c; +infinity when the model has no cutoff
  std::optional<double> x0;  // regime scale: 1/<H>, 1/||H|| or 1/dH
  std::string label;
  std::function<double(double)> eval;

  double operator()(double gamma) const;
};

/// Moments of the generator H (ground level at zero, so <H> >= 0).
/// seminorm_h = Lambda - lambda is present only for bounded spectra.
struct GeneratorMoments {
  double mean_h = 0.0;
  double std_h = 0.0;
  std::optional<double> seminorm_h;
};

/// F(gamma) = max(0, 1 - gamma/x0) with x0 = 1/||H|| (bounded) or
/// x0 = 1/<H> (unbounded generator, passive measurements).
FidelityModel linear_bound_model(const GeneratorMoments& moments, bool bounded);

/// F(gamma) = cos(gamma dH) for gamma <= pi/(2 dH), 0 beyond.
FidelityModel cosine_bound_model(const GeneratorMoments& moments);

/// M-fold repeated-measurement fidelity F^M.
double repeat(double fidelity, long m);

}  // namespace zzb
