#pragma once

#include <functional>
#include <string>

#include "zzbound/models.hpp"
#include "zzbound/prior.hpp"

namespace zzb {

enum class BoundMethod { Quadrature, ClosedFormLinear, ClosedFormCosine, CramerRao };

/// A computed sensitivity lower bound with its provenance.
struct SensitivityBound {
  double value = 0.0;
  BoundMethod method = BoundMethod::Quadrature;
  double z0 = 0.0;  // regime parameter W/(2 x0); 0 when no scale applies
  std::string model;
};

/// Ziv-Zakai bound by adaptive quadrature of
///   dY^2 = int_0^W gamma (1 - gamma/W) (1/2)(1 - sqrt(1 - F(gamma)^2)) dgamma
/// for any fidelity model. The domain is pre-split at the model cutoff,
/// where the square root has a branch-point kink. tol in (0, 1e-3] is the
/// absolute tolerance on the inner integral.
SensitivityBound zz_bound_quadrature(const UniformWindowPrior& prior,
                                     const FidelityModel& model, double tol);

/// Same quadrature with the tighter bracket (1/2)(1 - D(gamma)); used where
/// the catalog supplies the trace distance directly (mixed Fock states).
SensitivityBound zz_bound_from_distance(const UniformWindowPrior& prior,
                                        const std::function<double(double)>& distance,
                                        double tol, const std::string& label = "distance");

/// Closed-form ZZ bound for the linear fidelity model F = 1 - gamma/x0,
/// branching at z0 = W/(2 x0) = 1/2. Below z0 = 1e-3 the expression
/// cancels catastrophically and a series expansion is used instead.
SensitivityBound zz_closed_linear(double x0, double width);

/// Closed-form ZZ bound for the cosine model F = cos(gamma dH), branching
/// at z0 = pi/4, with the same series switch below z0 = 1e-3.
SensitivityBound zz_closed_cosine(double std_h, double width);

/// Quantum Cramer-Rao bound 1/sqrt(4 dH^2 + Pi) with prior Fisher
/// information Pi.
SensitivityBound cr_bound(double std_h, double prior_fisher);

/// Low-prior-information limits: sqrt(5/12 - pi/8)/<H> and
/// sqrt(pi^2/16 - 1/2)/dH.
double zz_linear_lpi_limit(double mean_h);
double zz_cosine_lpi_limit(double std_h);

}  // namespace zzb
