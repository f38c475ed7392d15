#include "zzbound/special.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace zzb {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

void require_angle(double theta) {
  if (!(theta >= -1e-12 && theta <= kTwoPi + 1e-12)) {
    throw std::domain_error("theta out of range [0, 2pi]: " + std::to_string(theta));
  }
}

double clamp_angle(double theta) {
  if (theta < 0.0) return 0.0;
  if (theta > kTwoPi) return kTwoPi;
  return theta;
}

// Zeta for real s >= 2 by direct sum plus Euler-Maclaurin tail.
// With N = 64 and three correction terms the truncation error is far
// below double rounding for every s we use.
double zeta_euler_maclaurin(double s) {
  constexpr int N = 64;
  double sum = 0.0;
  for (int n = N - 1; n >= 1; --n) sum += std::pow(n, -s);
  const double ns = std::pow(N, -s);
  double tail = N * ns / (s - 1.0) + 0.5 * ns;
  tail += s / 12.0 * ns / N;
  tail -= s * (s + 1.0) * (s + 2.0) / 720.0 * ns / (static_cast<double>(N) * N * N);
  tail += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) / 30240.0 * ns /
          (std::pow(static_cast<double>(N), 5));
  return sum + tail;
}

// zeta(2m) for the Clausen/Glaisher series, m = 1..kEvenZetas.
constexpr int kEvenZetas = 40;
const std::array<double, kEvenZetas>& even_zetas() {
  static const std::array<double, kEvenZetas> table = [] {
    std::array<double, kEvenZetas> t{};
    for (int m = 1; m <= kEvenZetas; ++m) t[m - 1] = zeta_euler_maclaurin(2.0 * m);
    return t;
  }();
  return table;
}

// Cl2 on [0, pi]: theta(1 - ln theta) + sum_m zeta(2m) theta^{2m+1} / (m(2m+1)(2pi)^{2m}).
double clausen2_series(double theta) {
  if (theta == 0.0) return 0.0;
  double acc = theta * (1.0 - std::log(theta));
  const auto& z2m = even_zetas();
  const double q = theta / kTwoPi;
  const double q2 = q * q;
  double pow_term = theta * q2;  // theta^{2m+1} / (2pi)^{2m} at m = 1
  for (int m = 1; m <= kEvenZetas; ++m) {
    const double term = z2m[m - 1] * pow_term / (m * (2.0 * m + 1.0));
    acc += term;
    if (term < 1e-17 * acc) break;
    pow_term *= q2;
  }
  return acc;
}

// int_0^theta Cl2(t) dt on [0, pi]:
// theta^2 (3/4 - ln(theta)/2) + sum_m zeta(2m) theta^{2m+2} / (m(2m+1)(2m+2)(2pi)^{2m}).
double clausen2_integral(double theta) {
  if (theta == 0.0) return 0.0;
  double acc = theta * theta * (0.75 - 0.5 * std::log(theta));
  const auto& z2m = even_zetas();
  const double q = theta / kTwoPi;
  const double q2 = q * q;
  double pow_term = theta * theta * q2;  // theta^{2m+2} / (2pi)^{2m} at m = 1
  for (int m = 1; m <= kEvenZetas; ++m) {
    const double term = z2m[m - 1] * pow_term / (m * (2.0 * m + 1.0) * (2.0 * m + 2.0));
    acc += term;
    if (term < 1e-17 * acc) break;
    pow_term *= q2;
  }
  return acc;
}

double bessel_j0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<double>(k) * k);
    sum += term;
    if (std::fabs(term) < 1e-18) break;
  }
  return sum;
}

// Hankel expansion: J0(x) = sqrt(2/(pi x)) [P cos(x - pi/4) - Q sin(x - pi/4)],
// P = sum (-1)^k mu_{2k} z^{2k} / (2k)!, Q = sum (-1)^{k+1} mu_{2k+1} z^{2k+1} / (2k+1)!,
// z = 1/(8x), mu_m = ((2m-1)!!)^2. Truncated at the smallest term.
double bessel_j0_asymptotic(double x) {
  const double z = 1.0 / (8.0 * x);
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;  // mu_m z^m / m!
  double prev = 1.0;
  int sign_p = -1;
  int sign_q = -1;
  for (int m = 1; m < 60; ++m) {
    const double odd = 2.0 * m - 1.0;
    term *= odd * odd * z / m;
    if (term >= prev) break;  // asymptotic series: stop at smallest term
    if (m % 2 == 1) {
      q += sign_q * term;
      sign_q = -sign_q;
    } else {
      p += sign_p * term;
      sign_p = -sign_p;
    }
    prev = term;
    if (term < 1e-18) break;
  }
  const double chi = x - 0.25 * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double zeta(int s) {
  if (s == 2) return kPi * kPi / 6.0;
  if (s == 3) {
    static const double z3 = zeta_euler_maclaurin(3.0);
    return z3;
  }
  throw std::invalid_argument("zeta: unsupported order " + std::to_string(s));
}

double clausen2(double theta) {
  require_angle(theta);
  theta = clamp_angle(theta);
  if (theta > kPi) return -clausen2_series(kTwoPi - theta);
  return clausen2_series(theta);
}

std::complex<double> polylog_unit_circle(int s, double theta) {
  if (s != 2 && s != 3) {
    throw std::invalid_argument("polylog_unit_circle: unsupported order " + std::to_string(s));
  }
  require_angle(theta);
  theta = clamp_angle(theta);
  if (s == 2) {
    const double re = kPi * kPi / 6.0 - 0.5 * kPi * theta + 0.25 * theta * theta;
    return {re, clausen2(theta)};
  }
  // Re Li3 = zeta(3) - int_0^theta Cl2; the cosine series is even about
  // theta = pi, so int_0^theta Cl2 = int_0^{2pi - theta} Cl2 there.
  const double re = zeta(3) - clausen2_integral(std::fmin(theta, kTwoPi - theta));
  // Im Li3 = (2 pi^3 / 3) B3(theta / 2pi), B3(u) = u(u - 1/2)(u - 1).
  const double u = theta / kTwoPi;
  const double im = (2.0 * kPi * kPi * kPi / 3.0) * u * (u - 0.5) * (u - 1.0);
  return {re, im};
}

double legendre_p(int n, double x) {
  if (n < 0) throw std::invalid_argument("legendre_p: negative degree");
  if (!(std::fabs(x) <= 1.0 + 1e-12)) {
    throw std::domain_error("legendre_p: |x| > 1");
  }
  x = std::fmin(1.0, std::fmax(-1.0, x));
  if (n == 0) return 1.0;
  double pkm1 = 1.0;
  double pk = x;
  for (int k = 1; k < n; ++k) {
    const double pkp1 = ((2.0 * k + 1.0) * x * pk - k * pkm1) / (k + 1.0);
    pkm1 = pk;
    pk = pkp1;
  }
  return pk;
}

double bessel_j0(double x) {
  x = std::fabs(x);
  if (x <= 12.0) return bessel_j0_series(x);
  return bessel_j0_asymptotic(x);
}

}  // namespace zzb
