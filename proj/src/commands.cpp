#include "zzbound/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "zzbound/bounds.hpp"
#include "zzbound/special.hpp"

namespace zzb {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string row;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) row += ',';
    row += c;
    first = false;
  }
  row += '\n';
  return row;
}

}  // namespace

std::string format_sig(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void validate_sweep(const Sweep& s) {
  if (s.points < 2) throw std::invalid_argument("sweep: points must be >= 2");
  if (!(s.min < s.max)) throw std::invalid_argument("sweep: min must be < max");
  if (s.log_spaced && !(s.min > 0.0)) {
    throw std::invalid_argument("sweep: log spacing requires min > 0");
  }
}

double sweep_value(const Sweep& s, int i) {
  const double t = static_cast<double>(i) / (s.points - 1);
  if (s.log_spaced) return s.min * std::pow(s.max / s.min, t);
  return s.min + (s.max - s.min) * t;
}

std::string cmd_fig2(const Fig2Options& opt) {
  if (opt.variant != 'a' && opt.variant != 'b') {
    throw std::invalid_argument("fig2: variant must be 'a' or 'b'");
  }
  validate_sweep(opt.z0);
  const bool linear = opt.variant == 'a';
  const double scale = linear ? opt.mean_h : opt.std_h;
  if (!(scale > 0.0)) throw std::invalid_argument("fig2: generator scale must be > 0");
  const double x0 = 1.0 / scale;
  const double hl = linear ? zz_linear_lpi_limit(opt.mean_h) : zz_cosine_lpi_limit(opt.std_h);
  GeneratorMoments moments;
  moments.mean_h = opt.mean_h;
  moments.std_h = opt.std_h;
  const FidelityModel model = linear ? linear_bound_model(moments, false)
                                     : cosine_bound_model(moments);

  std::string out = "z0,dy_lb_closed,dy_lb_quadrature,hl_line,prior_line\n";
  for (int i = 0; i < opt.z0.points; ++i) {
    const double z0 = sweep_value(opt.z0, i);
    const double width = 2.0 * z0 * x0;
    const UniformWindowPrior prior(0.0, width);
    const SensitivityBound closed =
        linear ? zz_closed_linear(x0, width) : zz_closed_cosine(opt.std_h, width);
    const SensitivityBound quad = zz_bound_quadrature(prior, model, opt.tol);
    out += csv_row({format_sig(z0), format_sig(closed.value), format_sig(quad.value),
                    format_sig(hl), format_sig(x0 * z0 / std::sqrt(3.0))});
  }
  return out;
}

std::string cmd_fig4(const Fig4Options& opt) {
  if (opt.points < 2) throw std::invalid_argument("fig4: points must be >= 2");
  if (opt.lambda < 2) throw std::invalid_argument("fig4: lambda must be >= 2");
  const StateFamily ssw =
      StateFamily::make(StateKind::Ssw, {{"lambda", static_cast<double>(opt.lambda)}});
  const StateFamily dual = StateFamily::make(StateKind::DualFockLike, {});
  const StateFamily noon = StateFamily::make(StateKind::NoonLike, {});

  std::string out = "theta,f_ssw,f_dualfock,f_noonlike\n";
  for (int i = 0; i < opt.points; ++i) {
    const double theta = 2.0 * kPi * i / opt.points;
    out += csv_row({format_sig(theta), format_sig(ssw.fidelity(theta)),
                    format_sig(dual.fidelity(theta)), format_sig(noon.fidelity(theta))});
  }
  return out;
}

std::string cmd_bounds(const BoundsOptions& opt) {
  if (opt.method != "closed" && opt.method != "quadrature" && opt.method != "both") {
    throw std::invalid_argument("bounds: method must be closed, quadrature or both");
  }
  std::optional<Sweep> sweep = opt.width_sweep;
  if (sweep) {
    validate_sweep(*sweep);
  } else if (!(opt.width > 0.0)) {
    throw std::invalid_argument("bounds: width (or a width sweep) is required");
  }
  const int rows = sweep ? sweep->points : 1;
  const auto width_at = [&](int i) { return sweep ? sweep_value(*sweep, i) : opt.width; };

  const bool is_state = opt.model.rfind("state:", 0) == 0;
  std::string out;
  if (is_state) {
    if (opt.method == "closed") {
      throw std::invalid_argument("bounds: state models have no closed form");
    }
    const StateFamily state = StateFamily::from_name(opt.model.substr(6), opt.params);
    out = "width,dy_lb_quadrature\n";
    for (int i = 0; i < rows; ++i) {
      const double w = width_at(i);
      if (w > 2.0 * kPi) {
        throw std::invalid_argument("bounds: state models require width <= 2pi");
      }
      const UniformWindowPrior prior(0.0, w);
      const SensitivityBound b =
          state.has_exact_distance()
              ? zz_bound_from_distance(
                    prior, [&state](double g) { return state.distance(g); }, opt.tol,
                    state.label())
              : zz_bound_quadrature(prior, state.model(), opt.tol);
      out += csv_row({format_sig(w), format_sig(b.value)});
    }
    return out;
  }

  const bool linear = opt.model == "linear";
  if (!linear && opt.model != "cosine") {
    throw std::invalid_argument("bounds: unknown model '" + opt.model + "'");
  }
  GeneratorMoments moments;
  moments.mean_h = opt.mean_h;
  moments.std_h = opt.std_h;
  const FidelityModel model =
      linear ? linear_bound_model(moments, false) : cosine_bound_model(moments);
  const double x0 = *model.x0;

  out = "width,z0";
  if (opt.method != "quadrature") out += ",dy_lb_closed";
  if (opt.method != "closed") out += ",dy_lb_quadrature";
  out += '\n';
  for (int i = 0; i < rows; ++i) {
    const double w = width_at(i);
    std::string row = format_sig(w) + "," + format_sig(w / (2.0 * x0));
    if (opt.method != "quadrature") {
      const SensitivityBound closed =
          linear ? zz_closed_linear(x0, w) : zz_closed_cosine(opt.std_h, w);
      row += "," + format_sig(closed.value);
    }
    if (opt.method != "closed") {
      const UniformWindowPrior prior(0.0, w);
      row += "," + format_sig(zz_bound_quadrature(prior, model, opt.tol).value);
    }
    out += row + '\n';
  }
  return out;
}

StateFamily state_from_nbar(const std::string& name, double nbar,
                            const StateFamily::ParamMap& fixed) {
  if (!(nbar > 0.0)) throw std::invalid_argument("detect: nbar must be > 0");
  // the sweep supplies the size parameter; only these may be fixed
  static const std::map<std::string, std::vector<std::string>> allowed = {
      {"coherent", {"m"}},          {"entangled-coherent", {"m"}},
      {"scv", {"m"}},               {"tmsv", {"m"}},
      {"coherent-squeezed", {"r", "m"}},
      {"ssw", {"m"}},               {"small-peak", {"nu", "m"}},
      {"mixed-fock", {"p", "m"}},   {"noon-like", {"m"}},
      {"dual-fock-like", {"m"}},
  };
  const auto al = allowed.find(name);
  if (al == allowed.end()) throw std::invalid_argument("detect: unknown state '" + name + "'");
  for (const auto& [key, value] : fixed) {
    (void)value;
    if (std::find(al->second.begin(), al->second.end(), key) == al->second.end()) {
      throw std::invalid_argument("detect: state '" + name +
                                  "' does not take fixed parameter '" + key + "'");
    }
  }
  StateFamily::ParamMap p = fixed;
  const auto m_it = p.find("m");
  const long m = m_it == p.end() ? 1 : std::lround(m_it->second);

  if (name == "coherent" || name == "entangled-coherent") {
    p["alpha"] = std::sqrt(nbar);
    return StateFamily::from_name(name, p);
  }
  if (name == "scv") {
    p["alpha"] = std::sqrt(2.0 * nbar);
    return StateFamily::from_name(name, p);
  }
  if (name == "tmsv") {
    p["nbar"] = nbar;
    return StateFamily::from_name(name, p);
  }
  if (name == "coherent-squeezed") {
    if (auto it = p.find("r"); it != p.end()) {
      return StateFamily::coherent_squeezed_coherent(nbar, it->second, m);
    }
    return StateFamily::coherent_squeezed_optimal(nbar, m);
  }
  if (name == "ssw") {
    p["lambda"] = std::round(nbar);  // the sweep variable is the truncation
    return StateFamily::from_name(name, p);
  }
  if (name == "small-peak") {
    const auto nu_it = p.find("nu");
    if (nu_it == p.end()) throw std::invalid_argument("detect: small-peak requires --param nu=...");
    p["alpha"] = std::sqrt(nbar) / nu_it->second;
    return StateFamily::from_name(name, p);
  }
  if (name == "mixed-fock") {
    const double pr = p.count("p") ? p.at("p") : 1.0;
    p["p"] = pr;
    if (!(pr > 0.0)) throw std::invalid_argument("detect: mixed-fock requires p > 0");
    p["n"] = std::fmax(1.0, std::round(nbar / (2.0 * pr)));
    return StateFamily::from_name(name, p);
  }
  if (name == "noon-like" || name == "dual-fock-like") {
    return StateFamily::from_name(name, p);  // fixed mean photon number
  }
  throw std::invalid_argument("detect: unknown state '" + name + "'");
}

std::string cmd_detect(const DetectOptions& opt) {
  validate_sweep(opt.nbar);
  const bool fixed_nbar = opt.state == "noon-like" || opt.state == "dual-fock-like";
  const int rows = fixed_nbar ? 1 : opt.nbar.points;

  std::string out = "nbar,gamma_m,gamma_m_times_nbar,status\n";
  std::vector<std::pair<double, double>> points;
  int dropped = 0;
  for (int i = 0; i < rows; ++i) {
    const double target = sweep_value(opt.nbar, i);
    const StateFamily st = state_from_nbar(opt.state, target, opt.params);
    const DetectabilityResult r = min_detectable(st, opt.threshold, opt.window);
    const double nb = r.mean_photons;
    if (r.detectable) {
      points.emplace_back(nb, r.gamma_m);
      out += csv_row({format_sig(nb), format_sig(r.gamma_m),
                      format_sig(r.gamma_m * nb), "ok"});
    } else {
      ++dropped;
      out += csv_row({format_sig(nb), "", "", "not-detectable"});
    }
  }

  if (fixed_nbar) {
    out += "# fit: n/a (fixed mean photon number)\n";
    return out;
  }
  if (points.size() < 2) {
    out += "# fit: n/a (fewer than 2 detectable points)\n";
    return out;
  }
  const LogLogFit fit = log_log_fit(points);
  out += "# fit: alpha=" + format_sig(fit.alpha) + ",r2=" + format_sig(fit.r_squared) +
         ",points=" + std::to_string(points.size()) +
         ",dropped=" + std::to_string(dropped) + "\n";
  return out;
}

std::string cmd_compare_cr(const CompareCrOptions& opt) {
  if (!(opt.std_h > 0.0)) throw std::invalid_argument("compare-cr: std_h must be > 0");
  validate_sweep(opt.dx);
  std::string out = "dx,cr_bound,zz_cosine_closed\n";
  for (int i = 0; i < opt.dx.points; ++i) {
    const double dx = sweep_value(opt.dx, i);
    const double fisher = prior_fisher_information(GaussianPrior(0.0, dx));
    const double cr = cr_bound(opt.std_h, fisher).value;
    const double zz = zz_closed_cosine(opt.std_h, std::sqrt(12.0) * dx).value;
    out += csv_row({format_sig(dx), format_sig(cr), format_sig(zz)});
  }
  return out;
}

std::string plot_script(const std::string& csv, const std::string& subcommand) {
  std::ostringstream os;
  os << "# gnuplot script for " << subcommand << " output\n";
  os << "set datafile separator ','\n";
  os << "set key autotitle columnhead\n";
  if (subcommand == "fig2a" || subcommand == "fig2b") {
    os << "set logscale xy\n";
    os << "set xlabel 'z0'\n";
    os << "set ylabel 'dY_LB'\n";
    os << "plot '" << csv << "' using 1:2 with lines, \\\n"
       << "     '" << csv << "' using 1:3 with points pt 6 ps 0.4, \\\n"
       << "     '" << csv << "' using 1:4 with lines dt 2, \\\n"
       << "     '" << csv << "' using 1:5 with lines dt 3\n";
  } else if (subcommand == "fig4") {
    os << "set xlabel 'theta'\n";
    os << "set ylabel 'F'\n";
    os << "plot '" << csv << "' using 1:2 with lines dt 2, \\\n"
       << "     '" << csv << "' using 1:3 with lines, \\\n"
       << "     '" << csv << "' using 1:4 with lines dt 3\n";
  } else if (subcommand == "detect") {
    os << "set logscale xy\n";
    os << "set xlabel 'nbar'\n";
    os << "set ylabel 'gamma_m'\n";
    os << "plot '" << csv << "' using 1:2 with linespoints\n";
  } else if (subcommand == "compare-cr") {
    os << "set logscale xy\n";
    os << "set xlabel 'dx'\n";
    os << "set ylabel 'bound'\n";
    os << "plot '" << csv << "' using 1:2 with lines, \\\n"
       << "     '" << csv << "' using 1:3 with lines dt 2\n";
  } else {
    os << "set xlabel 'width'\n";
    os << "set ylabel 'dY_LB'\n";
    os << "plot for [col=2:*] '" << csv << "' using 1:col with lines\n";
  }
  return os.str();
}

}  // namespace zzb
