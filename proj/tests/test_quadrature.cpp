#include <doctest.h>

#include <cmath>

#include "zzbound/quadrature.hpp"

TEST_CASE("polynomials are exact") {
  const auto cubic = [](double x) { return x * x * x - 2.0 * x + 1.0; };
  const auto r = zzb::integrate_adaptive(cubic, 0.0, 2.0, 1e-9);
  CHECK(r.value == doctest::Approx(4.0 - 4.0 + 2.0).epsilon(1e-14));
}

TEST_CASE("smooth integrand to tight tolerance") {
  const auto f = [](double x) { return std::exp(-x) * std::sin(3.0 * x); };
  // int_0^pi e^{-x} sin(3x) dx = 3(1 + e^{-pi})/10
  const double expected = 0.3 * (1.0 + std::exp(-M_PI));
  const auto r = zzb::integrate_adaptive(f, 0.0, M_PI, 1e-12);
  CHECK(r.value == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("square-root kink converges") {
  const auto f = [](double x) { return std::sqrt(x); };
  const auto r = zzb::integrate_adaptive(f, 0.0, 1.0, 1e-10);
  CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("degenerate and invalid ranges") {
  const auto f = [](double x) { return x; };
  CHECK(zzb::integrate_adaptive(f, 1.0, 1.0, 1e-9).value == 0.0);
  CHECK_THROWS_AS(zzb::integrate_adaptive(f, 2.0, 1.0, 1e-9), std::invalid_argument);
  CHECK_THROWS_AS(zzb::integrate_adaptive(f, 0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("refinement budget exhaustion raises") {
  // A step placed at an irrational point defeats bisection refinement.
  const auto step = [](double x) { return x > 1.0 / std::sqrt(2.0) ? 1.0 : 0.0; };
  CHECK_THROWS_AS(zzb::integrate_adaptive(step, 0.0, 1.0, 1e-13, 18), zzb::ConvergenceError);
}
