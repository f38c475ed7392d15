#include "zzbound/models.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace zzb {

double FidelityModel::operator()(double gamma) const {
  if (!(gamma >= 0.0)) throw std::invalid_argument("FidelityModel: gamma must be >= 0");
  if (gamma >= cutoff) return 0.0;
  return eval(gamma);
}

FidelityModel linear_bound_model(const GeneratorMoments& moments, bool bounded) {
  double x0;
  std::string label;
  if (bounded) {
    if (!moments.seminorm_h.has_value()) {
      throw std::invalid_argument("linear_bound_model: bounded generator requires seminorm_h");
    }
    if (!(*moments.seminorm_h > 0.0)) {
      throw std::invalid_argument("linear_bound_model: seminorm_h must be > 0");
    }
    x0 = 1.0 / *moments.seminorm_h;
    label = "linear(|H|=" + std::to_string(*moments.seminorm_h) + ")";
  } else {
    if (!(moments.mean_h > 0.0)) {
      throw std::invalid_argument("linear_bound_model: mean_h must be > 0 (degenerate generator)");
    }
    x0 = 1.0 / moments.mean_h;
    label = "linear(<H>=" + std::to_string(moments.mean_h) + ")";
  }
  FidelityModel model;
  model.kind = ModelKind::LinearBound;
  model.cutoff = x0;
  model.x0 = x0;
  model.label = label;
  model.eval = [x0](double gamma) { return std::fmax(0.0, 1.0 - gamma / x0); };
  return model;
}

FidelityModel cosine_bound_model(const GeneratorMoments& moments) {
  if (!(moments.std_h > 0.0)) {
    throw std::invalid_argument("cosine_bound_model: std_h must be > 0");
  }
  const double dh = moments.std_h;
  const double x0 = 1.0 / dh;
  FidelityModel model;
  model.kind = ModelKind::CosineBound;
  model.cutoff = 0.5 * M_PI * x0;
  model.x0 = x0;
  model.label = "cosine(dH=" + std::to_string(dh) + ")";
  model.eval = [dh](double gamma) { return std::fmax(0.0, std::cos(gamma * dh)); };
  return model;
}

double repeat(double fidelity, long m) {
  if (m < 1) throw std::invalid_argument("repeat: m must be >= 1");
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) {
    throw std::invalid_argument("repeat: fidelity must lie in [0, 1]");
  }
  if (m == 1) return fidelity;
  return std::pow(fidelity, static_cast<double>(m));
}

}  // namespace zzb
