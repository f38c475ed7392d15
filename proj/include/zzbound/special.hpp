#pragma once

#include <complex>

namespace zzb {

/// Riemann zeta at integer order s in {2, 3}.
/// zeta(2) is pi^2/6 exactly; zeta(3) is computed once by an
/// Euler-Maclaurin accelerated series and cached.
double zeta(int s);

/// Clausen function Cl2(theta) = Im Li2(e^{i theta}) = sum sin(n theta)/n^2,
/// theta in [0, 2pi].
double clausen2(double theta);

/// Polylogarithm on the unit circle, Li_s(e^{i theta}) for s in {2, 3},
/// theta in [0, 2pi]. Real parts use the closed Bernoulli-polynomial forms,
/// imaginary parts the Clausen series (s = 2) and the exact cubic Bernoulli
/// polynomial (s = 3).
std::complex<double> polylog_unit_circle(int s, double theta);

/// Legendre polynomial P_n(x) for |x| <= 1 by the three-term recurrence.
double legendre_p(int n, double x);

/// Bessel function of the first kind J_0. Power series for |x| <= 12,
/// Hankel asymptotic expansion beyond.
double bessel_j0(double x);

}  // namespace zzb
