#include <cmath>
#include <random>

#include "doctest.h"
#include "mollow/triplet.hpp"

using namespace mollow;

TEST_CASE("mollow cubic values") {
  const CubicPoly m = mollow_poly(DriveParams(1.0, 0.0, 1.0));
  CHECK(m.c[3] == Complex{-1.0});
  CHECK(std::abs(m.eval(Complex{0.0}) - Complex{0.0, 0.75}) < 1e-16);

  // leading behavior -w^3 at large |w|
  const CubicPoly m2 = mollow_poly(DriveParams(1.0, 1.0, 1.0));
  const Complex w{1e4, 0.0};
  CHECK(std::abs(m2.eval(w) / (-w * w * w) - 1.0) < 1e-3);
}

TEST_CASE("triplet roots at delta = 0") {
  const TripletRoots t = triplet_roots(DriveParams(1.0, 0.0, 1.0));
  const double side = std::sqrt(15.0) / 4.0;
  CHECK(std::abs(t.lambda1() - Complex{-side, -0.75}) < 1e-12);
  CHECK(std::abs(t.lambda2() - Complex{0.0, -0.5}) < 1e-12);
  CHECK(std::abs(t.lambda3() - Complex{side, -0.75}) < 1e-12);
  CHECK(t.regime == Regime::Triplet);

  const TripletRoots sub = triplet_roots(DriveParams(1.0, 0.0, 0.2));
  CHECK(std::abs(sub.lambda1() - Complex{0.0, -0.9}) < 1e-12);
  CHECK(std::abs(sub.lambda2() - Complex{0.0, -0.6}) < 1e-12);
  CHECK(std::abs(sub.lambda3() - Complex{0.0, -0.5}) < 1e-12);
  CHECK(sub.regime == Regime::SubThreshold);

  // roots are roots
  const CubicPoly m = mollow_poly(DriveParams(1.0, 0.0, 1.0));
  for (const Complex lam : t.lambda) CHECK(std::abs(m.eval(lam)) < 1e-12);
}

TEST_CASE("threshold flip at rabi = gamma/4") {
  CHECK(triplet_roots(DriveParams(1.0, 0.0, 0.25 + 1e-6)).regime == Regime::Triplet);
  CHECK(triplet_roots(DriveParams(1.0, 0.0, 0.25 - 1e-6)).regime == Regime::SubThreshold);
}

TEST_CASE("saturation asymptote") {
  const TripletRoots a = triplet_roots_saturation(DriveParams(1.0, 0.0, 10.0));
  CHECK(a.lambda1() == Complex{-10.0, -0.75});
  CHECK(a.lambda2() == Complex{0.0, -0.5});
  CHECK(a.lambda3() == Complex{10.0, -0.75});
  const TripletRoots b = triplet_roots_saturation(DriveParams(2.0, 0.0, 20.0));
  CHECK(b.lambda1() == Complex{-20.0, -1.5});
  CHECK(b.lambda2() == Complex{0.0, -1.0});
  CHECK(b.lambda3() == Complex{20.0, -1.5});

  // exact sidebands approach the asymptote; relative deviation of the real
  // part is gamma^2/(32 rabi^2) ~ 3e-4 at rabi = 10
  const TripletRoots exact = triplet_roots(DriveParams(1.0, 0.0, 10.0));
  for (int k = 0; k < 3; ++k)
    CHECK(std::abs(exact.lambda[k].real() - a.lambda[k].real()) / 10.0 < 1e-3);

  const TripletRoots exact100 = triplet_roots(DriveParams(1.0, 0.0, 100.0));
  const TripletRoots asym100 = triplet_roots_saturation(DriveParams(1.0, 0.0, 100.0));
  for (int k = 0; k < 3; ++k)
    CHECK(std::abs(exact100.lambda[k].real() - asym100.lambda[k].real()) /
              std::abs(asym100.lambda[2].real()) <
          1e-4);
}

TEST_CASE("root structure on a random grid") {
  std::mt19937_64 gen(17);
  auto u = [&] { return double(gen() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < 400; ++i) {
    const double delta = 10.0 * (u() - 0.5);
    const double s = std::pow(10.0, 6.0 * u() - 3.0);
    const DriveParams p(1.0, delta, rabi_from_saturation(s, 1.0, delta));
    const TripletRoots t = triplet_roots(p);
    const CubicPoly m = mollow_poly(p);

    // Vieta reconstruction of -(w-l1)(w-l2)(w-l3)
    const Complex l1 = t.lambda[0], l2 = t.lambda[1], l3 = t.lambda[2];
    const double scale = std::max({1.0, p.rabi, std::abs(delta)});
    CHECK(std::abs((l1 + l2 + l3) - m.c[2]) <= 1e-10 * scale);
    CHECK(std::abs(-(l1 * l2 + l1 * l3 + l2 * l3) - m.c[1]) <= 1e-10 * scale * scale);
    CHECK(std::abs(l1 * l2 * l3 - m.c[0]) <= 1e-10 * scale * scale * scale);

    // ordering, decay, residual polish
    CHECK(t.lambda[0].real() <= t.lambda[1].real());
    CHECK(t.lambda[1].real() <= t.lambda[2].real());
    int central = 0;
    for (const Complex lam : t.lambda) {
      CHECK(lam.imag() < 0.0);
      CHECK(std::abs(m.eval(lam)) <= 1e-12 * std::max(1.0, std::pow(p.rabi, 3)));
      if (std::abs(lam.real()) <= center_tolerance(p)) ++central;
    }
    // a real-coefficient cubic in y = -i w guarantees one purely imaginary
    // root; the other two are imaginary or a symmetric pair
    CHECK(central == (t.regime == Regime::Triplet ? 1 : 3));
  }
}
