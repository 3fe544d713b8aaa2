#include <cmath>
#include <random>

#include "doctest.h"
#include "mollow/oracle.hpp"
#include "mollow/poly.hpp"
#include "mollow/spectra.hpp"
#include "mollow/triplet.hpp"

using namespace mollow;

namespace {
double rel(Complex a, Complex b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}
}  // namespace

TEST_CASE("undriven kernels reduce to the bare Lorentzian") {
  const DriveParams p(1.0, 0.7, 0.0);
  const SpectralKernel kz = build_kernel(Component::KerrZ, p);
  const SpectralKernel kp = build_kernel(Component::ParametricZ, p);
  const SpectralKernel kt = build_kernel(Component::Transverse, p);
  CHECK(kp.numerator.is_zero());
  for (double w : {-5.0, -1.0, 0.0, 0.3, 2.0, 8.0}) {
    const Complex want = 1.0 / ((0.7 + w) * (0.7 + w) + 0.25);
    CHECK(rel(eval_kernel(kz, Complex{w}), want) < 1e-12);
    CHECK(eval_kernel(kp, Complex{w}) == Complex{0.0});
    // undriven medium is isotropic
    CHECK(rel(eval_kernel(kt, Complex{w}), eval_kernel(kz, Complex{w})) < 1e-12);
  }
  CHECK(std::abs(eval_kernel(build_kernel(Component::KerrZ, DriveParams(1.0, 0.0, 0.0)),
                             Complex{0.0}) -
                 Complex{4.0}) < 1e-13);
}

TEST_CASE("kernel values against the resolvent oracle") {
  const DriveParams p(1.0, 0.0, 1.0);
  const SpectralKernel k = build_kernel(Component::KerrZ, p);
  CHECK(rel(eval_kernel(k, Complex{0.0}), Complex{4.0 / 9.0}) < 1e-13);
  for (double w : {-2.0, -0.5, 0.0, 0.5, 2.0})
    CHECK(rel(eval_kernel(k, Complex{w}), commutator_spectrum(Component::KerrZ, p, w)) < 1e-8);

  std::mt19937_64 gen(23);
  auto u = [&] { return double(gen() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < 120; ++i) {
    const double delta = 10.0 * (u() - 0.5);
    const double s = std::pow(10.0, 6.0 * u() - 3.0);
    const DriveParams q(1.0, delta, rabi_from_saturation(s, 1.0, delta));
    const double w = 20.0 * (u() - 0.5);
    const Component c = i % 3 == 0   ? Component::KerrZ
                        : i % 3 == 1 ? Component::ParametricZ
                                     : Component::Transverse;
    const SpectralKernel kk = build_kernel(c, q);
    CHECK(rel(eval_kernel(kk, Complex{w}), commutator_spectrum(c, q, w)) < 1e-8);
  }
}

TEST_CASE("denominator structure and poles") {
  {  // resonant drive merges conj(Lambda2) with the upper Lorentzian root
    const SpectralKernel k = build_kernel(Component::KerrZ, DriveParams(1.0, 0.0, 1.0));
    CHECK(k.numerator.degree() <= 6);
    int total = 0, upper_double = 0;
    for (const auto& f : k.denom_factors) {
      total += f.multiplicity;
      if (f.multiplicity == 2 && std::abs(f.root - Complex{0.0, 0.5}) < 1e-9) ++upper_double;
    }
    CHECK(total == 8);
    CHECK(upper_double == 1);
    const double side = std::sqrt(15.0) / 4.0;
    bool found_conj_side = false;
    for (const auto& f : k.denom_factors)
      if (std::abs(f.root - Complex{side, 0.75}) < 1e-12) found_conj_side = true;
    CHECK(found_conj_side);
  }
  {  // detuned parametric kernel: eight distinct simple poles
    const SpectralKernel k = build_kernel(Component::ParametricZ, DriveParams(1.0, 1.0, 1.0));
    CHECK(k.numerator.degree() <= 5);
    CHECK(kernel_poles(k).size() == 8);
    for (const auto& [root, mult] : kernel_poles(k)) CHECK(mult == 1);
  }
  {  // undriven transverse kernel keeps its four bare roots
    const SpectralKernel k = build_kernel(Component::Transverse, DriveParams(1.0, 0.0, 0.0));
    CHECK(k.numerator.degree() <= 2);
    const auto poles = kernel_poles(k);
    CHECK(poles.size() == 4);
    for (Complex want : {Complex{0.0, -0.5}, Complex{0.0, -1.0}, Complex{0.0, 0.5},
                         Complex{0.0, 1.0}}) {
      bool found = false;
      for (const auto& [root, mult] : poles)
        if (std::abs(root - want) < 1e-12 && mult == 1) found = true;
      CHECK(found);
    }
  }
  {  // expanding the factored denominator reproduces the defining product
    const DriveParams p(1.0, 0.7, 1.3);
    const SpectralKernel k = build_kernel(Component::KerrZ, p);
    Poly factored = Poly::constant(k.denom_const);
    for (const auto& f : k.denom_factors)
      for (int j = 0; j < f.multiplicity; ++j)
        factored = factored * Poly::linear(-f.root, Complex{1.0});
    const Poly m = mollow_poly(p).as_poly();
    const Poly direct = (Poly::linear(Complex{0.7, -0.5}, Complex{1.0}) *
                         Poly::linear(Complex{0.7, 0.5}, Complex{1.0})) *
                        (m * m.conj_coeffs());
    CHECK(factored.degree() == 8);
    for (int j = 0; j <= 8; ++j)
      CHECK(std::abs(factored.coeff(j) - direct.coeff(j)) <=
            1e-10 * std::max(std::abs(direct.coeff(j)), 1.0));
  }
}

TEST_CASE("evaluation at a pole is rejected") {
  const SpectralKernel k = build_kernel(Component::KerrZ, DriveParams(1.0, 0.0, 1.0));
  CHECK_THROWS_AS(eval_kernel(k, Complex{0.0, -0.5}), EvaluationAtPole);
}

TEST_CASE("realness and decay of the elastic kernels") {
  std::mt19937_64 gen(29);
  auto u = [&] { return double(gen() >> 11) * 0x1.0p-53; };
  for (int i = 0; i < 60; ++i) {
    const double delta = 10.0 * (u() - 0.5);
    const double s = std::pow(10.0, 4.0 * u() - 2.0);
    const DriveParams p(1.0, delta, rabi_from_saturation(s, 1.0, delta));
    const double w = 20.0 * (u() - 0.5);
    for (Component c : {Component::KerrZ, Component::Transverse}) {
      const Complex v = eval_kernel(build_kernel(c, p), Complex{w});
      CHECK(std::abs(v.imag()) <= 1e-10 * std::abs(v));
    }
    for (Component c : {Component::KerrZ, Component::ParametricZ, Component::Transverse}) {
      const SpectralKernel k = build_kernel(c, p);
      const double far = 1e6 * std::max(1.0, p.rabi);
      // |K| w^2 stays bounded: the kernel decays at least like 1/w^2
      const double a1 = std::abs(eval_kernel(k, Complex{far})) * far * far;
      const double a2 = std::abs(eval_kernel(k, Complex{2.0 * far})) * 4.0 * far * far;
      CHECK(a2 <= a1 * 1.5 + 1e-12);
    }
  }
}
