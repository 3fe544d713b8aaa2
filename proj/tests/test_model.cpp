#include <cmath>
#include <random>

#include "doctest.h"
#include "mollow/model.hpp"

using namespace mollow;

TEST_CASE("saturation parameter") {
  CHECK(saturation(DriveParams(1.0, 0.0, 0.0)) == 0.0);
  CHECK(saturation(DriveParams(1.0, 0.0, 1.0)) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(saturation(DriveParams(1.0, 0.5, 1.0)) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("rabi from saturation inverts saturation") {
  CHECK(rabi_from_saturation(0.0, 1.0, 0.0) == 0.0);
  CHECK(rabi_from_saturation(2.0, 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rabi_from_saturation(1.0, 1.0, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(rabi_from_saturation(-0.1, 1.0, 0.0), std::domain_error);

  std::mt19937_64 gen(3);
  auto u = [&] { return double(gen() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < 200; ++i) {
    const double gamma = 0.5 + u();
    const double delta = 10.0 * (u() - 0.5);
    const double rabi = 5.0 * u();
    const DriveParams p(gamma, delta, rabi);
    const double back = rabi_from_saturation(saturation(p), gamma, delta);
    CHECK(std::abs(back - rabi) <= 1e-12 * std::max(rabi, 1e-30));
  }
}

TEST_CASE("steady state examples") {
  const SteadyState undriven = steady_state(DriveParams(1.0, 0.0, 0.0));
  CHECK(undriven.sigma_minus == Complex{0.0});
  CHECK(undriven.sigma_plus == Complex{0.0});
  CHECK(undriven.sigma_z == -0.5);
  CHECK(undriven.s == 0.0);

  const SteadyState resonant = steady_state(DriveParams(1.0, 0.0, 1.0));
  CHECK(std::abs(resonant.sigma_minus - Complex{0.0, 1.0 / 3.0}) < 1e-16);
  CHECK(std::abs(resonant.sigma_plus - Complex{0.0, -1.0 / 3.0}) < 1e-16);
  CHECK(resonant.sigma_z == doctest::Approx(-1.0 / 6.0).epsilon(1e-15));
  CHECK(resonant.s == doctest::Approx(2.0).epsilon(1e-15));

  // s = 2e4; the population imbalance closes to zero in the saturation limit
  const SteadyState strong = steady_state(DriveParams(1.0, 0.0, 100.0));
  CHECK(strong.sigma_z == doctest::Approx(-0.5 / 20001.0).epsilon(1e-14));
}

TEST_CASE("steady state invariants on a random grid") {
  std::mt19937_64 gen(11);
  auto u = [&] { return double(gen() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < 500; ++i) {
    const double delta = 10.0 * (u() - 0.5);
    const double rabi = std::exp(6.0 * (u() - 0.5));
    const DriveParams p(1.0, delta, rabi);
    const SteadyState st = steady_state(p);
    CHECK(st.sigma_plus == std::conj(st.sigma_minus));
    CHECK(st.sigma_z >= -0.5);
    CHECK(st.sigma_z < 0.0);
    CHECK(std::abs(st.sigma_minus) < 0.5);
    CHECK(std::abs((st.sigma_z + 0.5) - st.s / (2.0 * (st.s + 1.0))) < 1e-15);
    // monotone in rabi^2, even in delta
    CHECK(saturation(DriveParams(1.0, delta, rabi * 1.01)) > saturation(p));
    CHECK(saturation(DriveParams(1.0, -delta, rabi)) == saturation(p));
  }
}

TEST_CASE("dense-medium renormalization") {
  const DriveParams p(1.0, 0.2, 0.8);
  CHECK(renormalize_dense(p, 1.0).gamma == 1.0);
  CHECK(renormalize_dense(p, 4.0).gamma == 2.0);
  CHECK(renormalize_dense(DriveParams(0.5, 0.0, 0.0), 2.25).gamma == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(renormalize_dense(p, 4.0).delta == p.delta);
  CHECK(renormalize_dense(p, 4.0).rabi == p.rabi);
  CHECK_THROWS_AS(renormalize_dense(p, 0.99), std::domain_error);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(DriveParams(0.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DriveParams(-1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DriveParams(1.0, 0.0, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(DensityScale(-1.0), std::invalid_argument);
  CHECK(DensityScale::from_density_lambda3(2.0).scale == doctest::Approx(1.5).epsilon(1e-15));
}
