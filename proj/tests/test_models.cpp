#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "zzbound/models.hpp"

using oracles::kPi;
using zzb::GeneratorMoments;

TEST_CASE("linear bound model, unbounded generator") {
  GeneratorMoments m;
  m.mean_h = 1.0;
  const auto f = zzb::linear_bound_model(m, false);
  CHECK(f(0.0) == doctest::Approx(1.0));
  CHECK(f(0.25) == doctest::Approx(0.75));
  CHECK(f(2.0) == doctest::Approx(0.0));  // beyond cutoff x0 = 1
  CHECK(f.cutoff == doctest::Approx(1.0));
  CHECK(*f.x0 == doctest::Approx(1.0));
}

TEST_CASE("linear bound model, bounded generator") {
  GeneratorMoments m;
  m.seminorm_h = 4.0;
  const auto f = zzb::linear_bound_model(m, true);
  CHECK(f(0.125) == doctest::Approx(0.5));
  CHECK(f.cutoff == doctest::Approx(0.25));

  // 4-level diagonal H with spectrum spread ||H|| = 4: the model must
  // under-estimate |<Psi|e^{-i gamma H}|Psi>| everywhere.
  const std::vector<double> probs{0.37, 0.22, 0.26, 0.15};
  const std::vector<double> energies{0.0, 1.3, 2.6, 4.0};
  for (int i = 0; i <= 50; ++i) {
    const double gamma = 0.25 * i / 50.0;
    CHECK(oracles::diagonal_evolution_fidelity(probs, energies, gamma) >= f(gamma) - 1e-12);
  }
}

TEST_CASE("linear bound model rejects degenerate input") {
  GeneratorMoments m;
  CHECK_THROWS_AS(zzb::linear_bound_model(m, false), std::invalid_argument);  // mean_h = 0
  CHECK_THROWS_AS(zzb::linear_bound_model(m, true), std::invalid_argument);   // no seminorm
}

TEST_CASE("cosine bound model") {
  GeneratorMoments m;
  m.std_h = 1.0;
  const auto f = zzb::cosine_bound_model(m);
  CHECK(f(0.0) == doctest::Approx(1.0));
  CHECK(f(0.5 * kPi) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f(3.0) == doctest::Approx(0.0));

  m.std_h = 2.0;
  const auto g = zzb::cosine_bound_model(m);
  CHECK(g(kPi / 12.0) == doctest::Approx(std::cos(kPi / 6.0)).epsilon(1e-14));

  m.std_h = 0.0;
  CHECK_THROWS_AS(zzb::cosine_bound_model(m), std::invalid_argument);
}

TEST_CASE("models stay within [0,1], start at 1 and are nonincreasing") {
  GeneratorMoments m;
  m.mean_h = 0.7;
  m.std_h = 1.3;
  for (const auto& f : {zzb::linear_bound_model(m, false), zzb::cosine_bound_model(m)}) {
    CHECK(f(0.0) == doctest::Approx(1.0));
    double prev = 1.0;
    for (int i = 1; i <= 400; ++i) {
      const double gamma = 4.0 * i / 400.0;
      const double v = f(gamma);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
      CHECK(v <= prev + 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("negative gamma is a contract violation") {
  GeneratorMoments m;
  m.mean_h = 1.0;
  const auto f = zzb::linear_bound_model(m, false);
  CHECK_THROWS_AS(f(-0.1), std::invalid_argument);
}

TEST_CASE("repeat") {
  CHECK(zzb::repeat(1.0, 1'000'000) == doctest::Approx(1.0));
  CHECK(zzb::repeat(0.5, 2) == doctest::Approx(0.25));
  const long lambda = 10000;
  // (1 - 3/(pi Lambda))^Lambda -> e^{-3/pi} = 0.384839...
  const double f = 1.0 - 3.0 / (kPi * lambda);
  CHECK(std::fabs(zzb::repeat(f, lambda) - 0.38536) <= 2e-3);
  CHECK(std::fabs(zzb::repeat(f, lambda) - std::exp(-3.0 / kPi)) <= 2e-3);
  CHECK_THROWS_AS(zzb::repeat(0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(zzb::repeat(1.5, 2), std::invalid_argument);
}
