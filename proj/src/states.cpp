#include "zzbound/states.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "zzbound/special.hpp"

namespace zzb {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

struct ParamSpec {
  const char* name;
  double lo;
  double hi;
  bool integral;
};

struct VariantSpec {
  StateKind kind;
  const char* name;
  std::vector<ParamSpec> required;
};

const std::vector<VariantSpec>& variant_table() {
  static const std::vector<VariantSpec> table = {
      {StateKind::Coherent, "coherent", {{"alpha", 0.0, 1e8, false}}},
      {StateKind::Scv, "scv", {{"alpha", 0.0, 1e8, false}}},
      {StateKind::CoherentSqueezed,
       "coherent-squeezed",
       {{"alpha", 0.0, 1e8, false}, {"r", 0.0, 50.0, false}}},
      {StateKind::Ssw, "ssw", {{"lambda", 2.0, 1e9, true}}},
      {StateKind::SmallPeak,
       "small-peak",
       {{"nu", 1e-12, 1.0, false}, {"alpha", 0.0, 1e8, false}}},
      {StateKind::Tmsv, "tmsv", {{"nbar", 1e-12, 1e12, false}}},
      {StateKind::EntangledCoherent, "entangled-coherent", {{"alpha", 0.0, 1e8, false}}},
      {StateKind::NoonLike, "noon-like", {}},
      {StateKind::DualFockLike, "dual-fock-like", {}},
      {StateKind::MixedFock,
       "mixed-fock",
       {{"p", 0.0, 1.0, false}, {"n", 1.0, 1e9, true}}},
  };
  return table;
}

const VariantSpec& spec_for(StateKind kind) {
  for (const auto& v : variant_table()) {
    if (v.kind == kind) return v;
  }
  throw std::logic_error("unknown state kind");
}

void require_integral(const char* name, double value) {
  if (std::fabs(value - std::llround(value)) > 1e-9) {
    throw std::invalid_argument(std::string("state parameter '") + name +
                                "' must be an integer");
  }
}

double require_theta(double theta) {
  if (!(theta >= -1e-12 && theta <= kTwoPi * (1.0 + 1e-12))) {
    throw std::domain_error("state fidelity: theta out of range [0, 2pi]");
  }
  return std::fmin(kTwoPi, std::fmax(0.0, theta));
}

// |1 + exp(a2 (e^{i theta} - 1))| / 2, shared by SCV and entangled-coherent.
double scv_fidelity(double a2, double theta) {
  const std::complex<double> w =
      std::exp(std::complex<double>(-a2 * (1.0 - std::cos(theta)), a2 * std::sin(theta)));
  return 0.5 * std::abs(1.0 + w);
}

}  // namespace

StateFamily StateFamily::make(StateKind kind, const ParamMap& params) {
  const VariantSpec& spec = spec_for(kind);
  StateFamily st;
  st.kind_ = kind;
  st.name_ = spec.name;

  ParamMap seen = params;
  for (const auto& ps : spec.required) {
    auto it = seen.find(ps.name);
    if (it == seen.end()) {
      throw std::invalid_argument(std::string("state '") + spec.name +
                                  "' requires parameter '" + ps.name + "'");
    }
    const double v = it->second;
    if (!std::isfinite(v) || v < ps.lo || v > ps.hi) {
      std::ostringstream os;
      os << "state '" << spec.name << "' parameter '" << ps.name << "' out of range ["
         << ps.lo << ", " << ps.hi << "]";
      throw std::invalid_argument(os.str());
    }
    if (ps.integral) require_integral(ps.name, v);
    st.params_[ps.name] = ps.integral ? static_cast<double>(std::llround(v)) : v;
    seen.erase(it);
  }
  if (auto it = seen.find("m"); it != seen.end()) {
    require_integral("m", it->second);
    const long m = std::lround(it->second);
    if (m < 1) throw std::invalid_argument("state parameter 'm' must be >= 1");
    st.repeats_ = m;
    seen.erase(it);
  }
  if (!seen.empty()) {
    throw std::invalid_argument(std::string("state '") + spec.name +
                                "' does not accept parameter '" + seen.begin()->first + "'");
  }

  if (kind == StateKind::Ssw) {
    const long lam = std::lround(st.params_.at("lambda"));
    double norm = 0.0;
    double first_moment = 0.0;
    for (long n = lam; n >= 0; --n) {
      const double w = 1.0 / (static_cast<double>(n + 1) * (n + 1));
      norm += w;
      first_moment += n * w;
    }
    st.ssw_norm_ = norm;
    st.ssw_mean_ = first_moment / norm;
  }
  return st;
}

StateFamily StateFamily::from_name(const std::string& name, const ParamMap& params) {
  for (const auto& v : variant_table()) {
    if (name == v.name) return make(v.kind, params);
  }
  throw std::invalid_argument("unknown state '" + name + "'");
}

StateFamily StateFamily::coherent_squeezed_optimal(double nbar, long m) {
  if (!(nbar > 0.0)) throw std::invalid_argument("coherent_squeezed_optimal: nbar must be > 0");
  const double r = std::asinh(std::sqrt(0.5 * nbar));
  ParamMap p{{"alpha", std::sqrt(0.5 * nbar)}, {"r", r}, {"m", static_cast<double>(m)}};
  return make(StateKind::CoherentSqueezed, p);
}

StateFamily StateFamily::coherent_squeezed_coherent(double nbar, double r, long m) {
  const double sh2 = std::sinh(r) * std::sinh(r);
  if (!(nbar > sh2)) {
    throw std::invalid_argument(
        "coherent_squeezed_coherent: nbar must exceed sinh^2(r)");
  }
  ParamMap p{{"alpha", std::sqrt(nbar - sh2)}, {"r", r}, {"m", static_cast<double>(m)}};
  return make(StateKind::CoherentSqueezed, p);
}

double StateFamily::param(const std::string& key) const {
  auto it = params_.find(key);
  if (it == params_.end()) {
    throw std::invalid_argument("state '" + name_ + "' has no parameter '" + key + "'");
  }
  return it->second;
}

StateFamily StateFamily::with_repeats(long m) const {
  if (m < 1) throw std::invalid_argument("with_repeats: m must be >= 1");
  StateFamily copy = *this;
  copy.repeats_ = m;
  return copy;
}

std::string StateFamily::label() const {
  std::ostringstream os;
  os << name_;
  char sep = '(';
  for (const auto& [k, v] : params_) {
    os << sep << k << '=' << v;
    sep = ',';
  }
  if (repeats_ != 1) {
    os << sep << "m=" << repeats_;
    sep = ',';
  }
  if (sep != '(') os << ')';
  return os.str();
}

double StateFamily::single_fidelity(double theta) const {
  theta = require_theta(theta);
  switch (kind_) {
    case StateKind::Coherent: {
      const double a2 = param("alpha") * param("alpha");
      return std::exp(-a2 * (1.0 - std::cos(theta)));
    }
    case StateKind::Scv:
    case StateKind::EntangledCoherent:
      return scv_fidelity(param("alpha") * param("alpha"), theta);
    case StateKind::CoherentSqueezed: {
      const double a2 = param("alpha") * param("alpha");
      const double beta = 1.0 / (1.0 - std::tanh(param("r")));
      const double b2t2 = beta * beta * theta * theta;
      return std::exp(-a2 * beta * theta * theta / (1.0 + b2t2)) /
             std::pow(1.0 + b2t2, 0.25);
    }
    case StateKind::Ssw: {
      const long lam = std::lround(param("lambda"));
      // sum_{n=0}^{Lambda} e^{i n theta} / (n+1)^2 by incremental rotation
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      double rot_re = 1.0, rot_im = 0.0;
      double sum_re = 0.0, sum_im = 0.0;
      for (long n = 0; n <= lam; ++n) {
        const double w = 1.0 / (static_cast<double>(n + 1) * (n + 1));
        sum_re += rot_re * w;
        sum_im += rot_im * w;
        const double nr = rot_re * c - rot_im * s;
        rot_im = rot_re * s + rot_im * c;
        rot_re = nr;
      }
      return std::hypot(sum_re, sum_im) / ssw_norm_;
    }
    case StateKind::SmallPeak: {
      const double nu2 = param("nu") * param("nu");
      const double a2 = param("alpha") * param("alpha");
      const std::complex<double> w = std::exp(
          std::complex<double>(-a2 * (1.0 - std::cos(theta)), a2 * std::sin(theta)));
      return std::abs(1.0 + nu2 * w) / (1.0 + nu2);
    }
    case StateKind::Tmsv: {
      const double nbar = param("nbar");
      const double sh = std::sin(0.5 * theta);
      return 1.0 / std::sqrt(1.0 + nbar * (nbar + 2.0) * sh * sh);
    }
    case StateKind::NoonLike: {
      const std::complex<double> li3 = polylog_unit_circle(3, theta);
      return 0.5 * std::abs(1.0 + li3 / zeta(3));
    }
    case StateKind::DualFockLike:
      return std::abs(polylog_unit_circle(3, theta)) / zeta(3);
    case StateKind::MixedFock: {
      const double d = distance(theta);
      return std::sqrt(std::fmax(0.0, 1.0 - d * d));
    }
  }
  throw std::logic_error("unreachable state kind");
}

double StateFamily::fidelity(double theta) const {
  // moduli and normalizations can land a rounding step outside [0, 1]
  const double f = std::fmin(1.0, std::fmax(0.0, single_fidelity(theta)));
  return repeat(f, repeats_);
}

double StateFamily::distance(double theta) const {
  if (kind_ != StateKind::MixedFock) {
    throw std::invalid_argument("distance: available only for mixed-fock");
  }
  theta = require_theta(theta);
  const double p = param("p");
  const int n = static_cast<int>(std::lround(param("n")));
  const double pn = legendre_p(n, std::cos(theta));
  return p * std::sqrt(std::fmax(0.0, 1.0 - pn * pn));
}

double StateFamily::mean_photon() const {
  switch (kind_) {
    case StateKind::Coherent:
    case StateKind::EntangledCoherent:
      return param("alpha") * param("alpha");
    case StateKind::Scv:
      return 0.5 * param("alpha") * param("alpha");
    case StateKind::CoherentSqueezed: {
      const double sh = std::sinh(param("r"));
      return param("alpha") * param("alpha") + sh * sh;
    }
    case StateKind::Ssw:
      return ssw_mean_;
    case StateKind::SmallPeak:
      return param("nu") * param("nu") * param("alpha") * param("alpha");
    case StateKind::Tmsv:
      return param("nbar");
    case StateKind::NoonLike:
    case StateKind::DualFockLike:
      return zeta(2) / zeta(3);
    case StateKind::MixedFock:
      return 2.0 * param("p") * param("n");
  }
  throw std::logic_error("unreachable state kind");
}

FidelityModel StateFamily::model() const {
  FidelityModel m;
  m.kind = ModelKind::StateExact;
  m.cutoff = std::numeric_limits<double>::infinity();
  m.label = label();
  m.eval = [st = *this](double gamma) { return st.fidelity(gamma); };
  return m;
}

std::vector<std::string> StateFamily::known_names() {
  std::vector<std::string> names;
  for (const auto& v : variant_table()) names.emplace_back(v.name);
  return names;
}

double ssw_fidelity_limit(double theta) {
  return std::abs(polylog_unit_circle(2, theta)) / zeta(2);
}

double ssw_mean_photon_leading(double lambda) {
  if (!(lambda > 1.0)) throw std::invalid_argument("ssw_mean_photon_leading: lambda must be > 1");
  return std::log(lambda) / zeta(2);
}

double small_peak_fidelity_approx(double nu, double alpha, double theta, long m) {
  if (!(nu > 0.0)) throw std::invalid_argument("small_peak_fidelity_approx: nu must be > 0");
  const double base = 1.0 - nu * nu * (1.0 - std::cos(alpha * alpha * theta));
  return repeat(std::fmax(0.0, base), m);
}

double tmsv_fidelity_series(double nbar, double theta, double tail_tol) {
  if (!(nbar > 0.0)) throw std::invalid_argument("tmsv_fidelity_series: nbar must be > 0");
  if (!(tail_tol > 0.0)) throw std::invalid_argument("tmsv_fidelity_series: tail_tol must be > 0");
  const double t = nbar / (nbar + 2.0);
  // |P_n| <= 1, so the dropped tail is bounded by t^{N+1}.
  const long nmax = static_cast<long>(std::ceil(std::log(tail_tol) / std::log(t)));
  const double x = std::cos(theta);
  double pkm1 = 1.0;  // P_0
  double pk = x;      // P_1
  double weight = 1.0 - t;
  double sum = weight * pkm1;
  weight *= t;
  sum += weight * pk;
  for (long k = 1; k < nmax; ++k) {
    const double pkp1 = ((2.0 * k + 1.0) * x * pk - k * pkm1) / (k + 1.0);
    pkm1 = pk;
    pk = pkp1;
    weight *= t;
    sum += weight * pk;
  }
  return sum;
}

double coherent_fidelity_gaussian_approx(double nbar, double theta) {
  return std::exp(-0.5 * nbar * theta * theta);
}

}  // namespace zzb
