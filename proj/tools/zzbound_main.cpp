#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "zzbound/commands.hpp"
#include "zzbound/quadrature.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNoConvergence = 3;

struct OutputOptions {
  std::string out;          // empty = stdout
  bool plot = false;
  unsigned long seed = 0;   // reserved; all computation is deterministic
};

void add_output_flags(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out", o.out, "Write CSV to this path (default: stdout)");
  cmd->add_flag("--plot-script", o.plot,
                "Also write a sibling gnuplot script referencing the CSV");
  cmd->add_option("--seed", o.seed, "Reserved; computation is deterministic")
      ->default_val(0);
}

void emit(const std::string& csv, const OutputOptions& o, const std::string& subcommand) {
  if (o.out.empty()) {
    if (o.plot) {
      throw std::invalid_argument("--plot-script requires --out");
    }
    std::cout << csv;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + o.out + "'");
  f << csv;
  if (!f.flush()) throw std::runtime_error("write failed for '" + o.out + "'");
  if (o.plot) {
    const std::filesystem::path csv_path(o.out);
    std::filesystem::path script_path = csv_path;
    script_path += ".gnuplot";
    std::ofstream s(script_path, std::ios::binary);
    if (!s) throw std::runtime_error("cannot open plot script '" + script_path.string() + "'");
    s << zzb::plot_script(csv_path.filename().string(), subcommand);
  }
}

zzb::StateFamily::ParamMap parse_params(const std::vector<std::string>& kvs) {
  zzb::StateFamily::ParamMap params;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("--param expects key=value, got '" + kv + "'");
    }
    const std::string key = kv.substr(0, eq);
    try {
      size_t used = 0;
      const double value = std::stod(kv.substr(eq + 1), &used);
      if (used != kv.size() - eq - 1) throw std::invalid_argument("");
      params[key] = value;
    } catch (const std::exception&) {
      throw std::invalid_argument("--param " + key + ": invalid numeric value");
    }
  }
  return params;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ziv-Zakai and Cramer-Rao sensitivity bounds for quantum phase estimation"};
  app.require_subcommand(1);

  OutputOptions out_fig2a, out_fig2b, out_fig4, out_bounds, out_detect, out_cr;

  // fig2a / fig2b
  zzb::Fig2Options fig2a_opt;
  auto* fig2a = app.add_subcommand("fig2a", "Linear-model bound sweep over z0");
  fig2a->add_option("--mean-h", fig2a_opt.mean_h, "Generator mean <H>")->default_val(1.0);
  fig2a->add_option("--z0-min", fig2a_opt.z0.min)->default_val(1e-2);
  fig2a->add_option("--z0-max", fig2a_opt.z0.max)->default_val(1e2);
  fig2a->add_option("--points", fig2a_opt.z0.points)->default_val(200);
  fig2a->add_option("--tol", fig2a_opt.tol, "Quadrature tolerance")->default_val(1e-9);
  add_output_flags(fig2a, out_fig2a);

  zzb::Fig2Options fig2b_opt;
  fig2b_opt.variant = 'b';
  auto* fig2b = app.add_subcommand("fig2b", "Cosine-model bound sweep over z0");
  fig2b->add_option("--std-h", fig2b_opt.std_h, "Generator deviation dH")->default_val(1.0);
  fig2b->add_option("--z0-min", fig2b_opt.z0.min)->default_val(1e-2);
  fig2b->add_option("--z0-max", fig2b_opt.z0.max)->default_val(1e2);
  fig2b->add_option("--points", fig2b_opt.z0.points)->default_val(200);
  fig2b->add_option("--tol", fig2b_opt.tol, "Quadrature tolerance")->default_val(1e-9);
  add_output_flags(fig2b, out_fig2b);

  // fig4
  zzb::Fig4Options fig4_opt;
  auto* fig4 = app.add_subcommand("fig4", "SSW / dual-Fock-like / noon-like fidelity curves");
  fig4->add_option("--lambda", fig4_opt.lambda, "SSW truncation")->default_val(10000);
  fig4->add_option("--points", fig4_opt.points)->default_val(500);
  add_output_flags(fig4, out_fig4);

  // bounds
  zzb::BoundsOptions bounds_opt;
  std::vector<std::string> bounds_params;
  double bounds_nbar = 0.0;
  double bwidth_min = 0.0, bwidth_max = 0.0;
  int bwidth_points = 0;
  auto* bounds = app.add_subcommand("bounds", "Ziv-Zakai bound for a fidelity model");
  bounds->add_option("--model", bounds_opt.model, "linear, cosine or state:<name>")->required();
  bounds->add_option("--mean-h", bounds_opt.mean_h, "Generator mean <H> (linear model)");
  bounds->add_option("--std-h", bounds_opt.std_h, "Generator deviation dH (cosine model)");
  bounds->add_option("--width", bounds_opt.width, "Prior window width W");
  bounds->add_option("--width-min", bwidth_min, "Sweep W logarithmically from here");
  bounds->add_option("--width-max", bwidth_max, "Sweep W logarithmically to here");
  bounds->add_option("--points", bwidth_points, "Sweep point count");
  bounds->add_option("--param", bounds_params, "State parameter key=value (repeatable)");
  bounds->add_option("--nbar", bounds_nbar, "Shorthand for --param nbar=<v>");
  bounds->add_option("--method", bounds_opt.method, "closed, quadrature or both")
      ->default_val("both");
  bounds->add_option("--tol", bounds_opt.tol, "Quadrature tolerance")->default_val(1e-9);
  add_output_flags(bounds, out_bounds);

  // detect
  zzb::DetectOptions detect_opt;
  std::vector<std::string> detect_params;
  auto* detect = app.add_subcommand("detect", "Minimum detectable separation sweep and fit");
  detect->add_option("--state", detect_opt.state, "State family name")->required();
  detect->add_option("--param", detect_params, "Fixed state parameter key=value (repeatable)");
  detect->add_option("--nbar-min", detect_opt.nbar.min)->default_val(1e1);
  detect->add_option("--nbar-max", detect_opt.nbar.max)->default_val(1e5);
  detect->add_option("--points", detect_opt.nbar.points)->default_val(5);
  detect->add_option("--threshold", detect_opt.threshold)->default_val(0.5);
  detect->add_option("--window-lo", detect_opt.window.lo)->default_val(1e-8);
  detect->add_option("--window-hi", detect_opt.window.hi)->default_val(6.26);
  detect->add_option("--grid-points", detect_opt.window.grid_points)->default_val(10000);
  add_output_flags(detect, out_detect);

  // compare-cr
  zzb::CompareCrOptions cr_opt;
  auto* cr = app.add_subcommand("compare-cr", "Cramer-Rao vs cosine ZZ bound over a dx sweep");
  cr->add_option("--std-h", cr_opt.std_h, "Generator deviation dH")->default_val(1.0);
  cr->add_option("--dx-min", cr_opt.dx.min)->default_val(1e-2);
  cr->add_option("--dx-max", cr_opt.dx.max)->default_val(1e2);
  cr->add_option("--points", cr_opt.dx.points)->default_val(50);
  add_output_flags(cr, out_cr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (fig2a->parsed()) {
      emit(zzb::cmd_fig2(fig2a_opt), out_fig2a, "fig2a");
    } else if (fig2b->parsed()) {
      emit(zzb::cmd_fig2(fig2b_opt), out_fig2b, "fig2b");
    } else if (fig4->parsed()) {
      emit(zzb::cmd_fig4(fig4_opt), out_fig4, "fig4");
    } else if (bounds->parsed()) {
      bounds_opt.params = parse_params(bounds_params);
      if (bounds->count("--nbar") > 0) bounds_opt.params["nbar"] = bounds_nbar;
      if (bounds->count("--width-min") || bounds->count("--width-max")) {
        zzb::Sweep s{bwidth_min, bwidth_max, bwidth_points > 0 ? bwidth_points : 50, true};
        bounds_opt.width_sweep = s;
      }
      emit(zzb::cmd_bounds(bounds_opt), out_bounds, "bounds");
    } else if (detect->parsed()) {
      detect_opt.params = parse_params(detect_params);
      emit(zzb::cmd_detect(detect_opt), out_detect, "detect");
    } else if (cr->parsed()) {
      emit(zzb::cmd_compare_cr(cr_opt), out_cr, "compare-cr");
    }
  } catch (const zzb::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNoConvergence;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
