#pragma once

#include <map>
#include <string>
#include <vector>

#include "zzbound/models.hpp"

namespace zzb {

enum class StateKind {
  Coherent,
  Scv,
  CoherentSqueezed,
  Ssw,
  SmallPeak,
  Tmsv,
  EntangledCoherent,
  NoonLike,
  DualFockLike,
  MixedFock,
};

/// A parameterized quantum state from the phase-estimation catalog,
/// exposing its mean photon number and exact fidelity curve F(theta)
/// under U_theta, composed over M repeated measurements as F^M.
///
/// Canonical parameter names: alpha, r, lambda, nu, nbar, n, p, m.
/// Each variant declares the parameters it requires; missing or extra
/// parameters are rejected at construction.
class StateFamily {
 public:
  using ParamMap = std::map<std::string, double>;

  static StateFamily make(StateKind kind, const ParamMap& params);
  static StateFamily from_name(const std::string& name, const ParamMap& params);

  /// Coherent-squeezed state at the optimal point alpha^2 = sinh^2 r,
  /// parameterized by total mean photon number.
  static StateFamily coherent_squeezed_optimal(double nbar, long m = 1);
  /// Asymptotically coherent regime alpha^2 >> sinh^2 r at fixed squeezing.
  static StateFamily coherent_squeezed_coherent(double nbar, double r, long m = 1);

  StateKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  std::string label() const;
  const ParamMap& params() const { return params_; }
  double param(const std::string& key) const;
  long repeats() const { return repeats_; }
  StateFamily with_repeats(long m) const;

  /// Exact fidelity F(theta)^M, theta in [0, 2pi]. For MixedFock this is
  /// the distance-induced bound sqrt(1 - D^2), raised to M.
  double fidelity(double theta) const;
  /// Single-measurement fidelity (M = 1).
  double single_fidelity(double theta) const;

  /// Trace distance D(theta); available only for MixedFock, where the
  /// catalog supplies D directly.
  double distance(double theta) const;
  bool has_exact_distance() const { return kind_ == StateKind::MixedFock; }

  /// Mean photon number; exact finite sums where the catalog's printed
  /// expression is only leading order (SSW).
  double mean_photon() const;

  /// Fidelity model wrapper around this state (no support cutoff).
  FidelityModel model() const;

  static std::vector<std::string> known_names();

 private:
  StateFamily() = default;

  StateKind kind_ = StateKind::Coherent;
  std::string name_;
  ParamMap params_;
  long repeats_ = 1;
  // SSW precomputed normalization and mean photon number.
  double ssw_norm_ = 0.0;
  double ssw_mean_ = 0.0;
};

/// SSW fidelity in the infinite-truncation limit, |Li2(e^{i theta})| / zeta(2).
double ssw_fidelity_limit(double theta);

/// Leading-order SSW mean photon number ln(Lambda)/zeta(2), for comparison
/// with the exact finite sum.
double ssw_mean_photon_leading(double lambda);

/// Small-peak approximate fidelity (1 - nu^2 (1 - cos(alpha^2 theta)))^M,
/// valid for alpha^2 (1 - cos theta) << 1; the exact pre-approximation form
/// lives on the StateFamily.
double small_peak_fidelity_approx(double nu, double alpha, double theta, long m = 1);

/// TMSV fidelity by the Legendre series (1-t) sum t^n P_n(cos theta),
/// t = nbar/(nbar + 2), truncated when the geometric tail drops below
/// tail_tol. Dual route to the closed form used by StateFamily.
double tmsv_fidelity_series(double nbar, double theta, double tail_tol = 1e-12);

/// Gaussian approximation exp(-nbar theta^2 / 2) to the coherent-state
/// fidelity, exposed as a comparison curve only.
double coherent_fidelity_gaussian_approx(double nbar, double theta);

}  // namespace zzb
