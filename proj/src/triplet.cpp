#include "mollow/triplet.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace mollow {

double center_tolerance(const DriveParams& p) {
  return 1e-9 * std::max({p.gamma, p.rabi, std::abs(p.delta)});
}

CubicPoly mollow_poly(const DriveParams& p) {
  const double g = p.gamma, d = p.delta, r = p.rabi;
  // expansion of M in w; the leading coefficient is -1 identically
  CubicPoly m;
  m.c[3] = Complex{-1.0, 0.0};
  m.c[2] = Complex{0.0, -2.0 * g};
  m.c[1] = Complex{d * d + r * r + 1.25 * g * g, 0.0};
  m.c[0] = Complex{0.0, g * (d * d + g * g / 4.0 + r * r / 2.0)};
  return m;
}

namespace {

// roots of the monic cubic z^3 + a z^2 + b z + c
std::array<Complex, 3> cardano(Complex a, Complex b, Complex c) {
  const Complex p = b - a * a / 3.0;
  const Complex q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const Complex sq = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  Complex u3 = -q / 2.0 + sq;
  if (std::abs(u3) < std::abs(-q / 2.0 - sq)) u3 = -q / 2.0 - sq;
  std::array<Complex, 3> t;
  if (u3 == Complex{0.0}) {
    const Complex t0 = std::pow(-q, 1.0 / 3.0);
    const Complex w{-0.5, std::sqrt(3.0) / 2.0};
    t = {t0, t0 * w, t0 * w * w};
  } else {
    const Complex u = std::pow(u3, 1.0 / 3.0);
    const Complex w{-0.5, std::sqrt(3.0) / 2.0};
    for (int k = 0; k < 3; ++k) {
      const Complex uk = u * (k == 0 ? Complex{1.0} : (k == 1 ? w : w * w));
      t[k] = uk - p / (3.0 * uk);
    }
  }
  for (auto& z : t) z -= a / 3.0;
  return t;
}

std::array<Complex, 3> companion_roots(Complex a, Complex b, Complex c) {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  m(0, 2) = -c;
  m(1, 0) = 1.0;
  m(1, 2) = -b;
  m(2, 1) = 1.0;
  m(2, 2) = -a;
  Eigen::ComplexEigenSolver<Eigen::Matrix3cd> es(m, false);
  const auto& ev = es.eigenvalues();
  return {ev(0), ev(1), ev(2)};
}

}  // namespace

TripletRoots triplet_roots(const DriveParams& p) {
  const double g = p.gamma, d = p.delta, r = p.rabi;
  const CubicPoly m = mollow_poly(p);
  std::array<Complex, 3> roots;

  if (d == 0.0) {
    // exact factorization M = -z (z^2 + i g z / 2 - r^2), z = w + i g/2
    const Complex shift{0.0, -g / 2.0};
    const Complex s0 = std::sqrt(Complex{r * r - g * g / 16.0, 0.0});
    roots = {shift, -s0 - I * (g / 4.0) + shift, s0 - I * (g / 4.0) + shift};
  } else {
    // solve in z = w + i g/2: z^3 + i(g/2) z^2 - (d^2 + r^2) z - i(g/2) d^2 = 0
    const Complex a = I * (g / 2.0);
    const Complex b{-(d * d + r * r), 0.0};
    const Complex c = -I * (g / 2.0) * (d * d);
    const double scale = std::max({g, r, std::abs(d)});
    // monic cubic discriminant; companion matrix is the fallback near root collisions
    const Complex disc = 18.0 * a * b * c - 4.0 * a * a * a * c + a * a * b * b -
                         4.0 * b * b * b - 27.0 * c * c;
    std::array<Complex, 3> z;
    if (std::abs(disc) < 1e-14 * std::pow(scale, 6)) {
      z = companion_roots(a, b, c);
    } else {
      z = cardano(a, b, c);
    }
    for (int k = 0; k < 3; ++k) {
      Complex w = z[k] - I * (g / 2.0);
      for (int it = 0; it < 2; ++it) {  // Newton polish on M itself
        const Complex f = m.eval(w);
        const Complex fp = m.eval_derivative(w);
        if (std::abs(fp) == 0.0) break;
        w -= f / fp;
      }
      roots[k] = w;
    }
  }

  std::sort(roots.begin(), roots.end(), [](Complex x, Complex y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });

  const double tol = center_tolerance(p);
  int off_axis = 0;
  for (const auto& w : roots)
    if (std::abs(w.real()) > tol) ++off_axis;

  TripletRoots t;
  t.lambda = roots;
  t.regime = off_axis >= 2 ? Regime::Triplet : Regime::SubThreshold;
  return t;
}

TripletRoots triplet_roots_saturation(const DriveParams& p) {
  const double g = p.gamma, r = p.rabi;
  TripletRoots t;
  t.lambda = {Complex{-r, -0.75 * g}, Complex{0.0, -0.5 * g}, Complex{r, -0.75 * g}};
  t.regime = r > center_tolerance(p) ? Regime::Triplet : Regime::SubThreshold;
  return t;
}

}  // namespace mollow
