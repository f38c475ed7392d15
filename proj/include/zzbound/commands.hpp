#pragma once

#include <optional>
#include <string>

#include "zzbound/detect.hpp"
#include "zzbound/states.hpp"

namespace zzb {

/// One number, 12 significant digits, C locale.
std::string format_sig(double v);

struct Sweep {
  double min = 0.0;
  double max = 0.0;
  int points = 2;
  bool log_spaced = true;
};

/// Grid value i of a validated sweep, i in [0, points).
double sweep_value(const Sweep& s, int i);
void validate_sweep(const Sweep& s);

struct Fig2Options {
  char variant = 'a';  // 'a' linear model, 'b' cosine model
  double mean_h = 1.0;
  double std_h = 1.0;
  Sweep z0{1e-2, 1e2, 200, true};
  double tol = 1e-9;
};

/// Sensitivity-bound comparison sweep: z0, closed form, quadrature,
/// LPI asymptote and prior deviation, as CSV.
std::string cmd_fig2(const Fig2Options& opt);

struct Fig4Options {
  long lambda = 10000;
  int points = 500;  // theta_i = 2pi i / points, i in [0, points)
};

/// Fidelity-vs-phase curves for the SSW, dual-Fock-like and noon-like
/// states, as CSV.
std::string cmd_fig4(const Fig4Options& opt);

struct BoundsOptions {
  std::string model;  // "linear", "cosine" or "state:<name>"
  double mean_h = 0.0;
  double std_h = 0.0;
  StateFamily::ParamMap params;
  double width = 0.0;
  std::optional<Sweep> width_sweep;
  double tol = 1e-9;
  std::string method = "both";  // "closed", "quadrature" or "both"
};

std::string cmd_bounds(const BoundsOptions& opt);

struct DetectOptions {
  std::string state;
  StateFamily::ParamMap params;  // fixed parameters (r, p, nu, m, ...)
  Sweep nbar{1e1, 1e5, 5, true};
  double threshold = 0.5;
  SearchWindow window{};
};

std::string cmd_detect(const DetectOptions& opt);

struct CompareCrOptions {
  double std_h = 1.0;
  Sweep dx{1e-2, 1e2, 50, true};
};

/// Cramer-Rao vs closed-form cosine ZZ bound over a Gaussian-prior
/// deviation sweep; the window prior is matched by W = sqrt(12) dx.
std::string cmd_compare_cr(const CompareCrOptions& opt);

/// Construct the sweepable state for `detect`: the sweep variable is the
/// target mean photon number (the truncation Lambda for ssw).
StateFamily state_from_nbar(const std::string& name, double nbar,
                            const StateFamily::ParamMap& fixed);

/// gnuplot script plotting every data column of the named CSV.
std::string plot_script(const std::string& csv_relative_path, const std::string& subcommand);

}  // namespace zzb
