#include "mollow/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "mollow/triplet.hpp"

namespace mollow {

namespace {

std::vector<SpectralKernel::Factor> merge_roots(const std::vector<Complex>& roots, double tol) {
  std::vector<SpectralKernel::Factor> out;
  for (Complex r : roots) {
    bool merged = false;
    for (auto& f : out) {
      if (std::abs(r - f.root) <= tol) {
        f.root = (f.root * double(f.multiplicity) + r) / double(f.multiplicity + 1);
        ++f.multiplicity;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back({r, 1});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
    return a.root.imag() < b.root.imag();
  });
  return out;
}

Poly build_numerator(Component component, const DriveParams& p, const SteadyState& st) {
  const double g = p.gamma, d = p.delta, r = p.rabi;
  const Complex ig2 = I * (g / 2.0);
  const Poly M = mollow_poly(p).as_poly();
  const Poly Mb = M.conj_coeffs();
  const Complex sm = st.sigma_minus, sp = st.sigma_plus;

  switch (component) {
    case Component::KerrZ: {
      Poly n = Complex{g} * (M * Mb);
      n = n + Poly::linear(Complex{0.0}, Complex{-g * r * r * r * r * d});
      n = n + (Complex{g / 2.0 * r * r} * Poly::linear(d - ig2, Complex{-1.0})) * Mb;
      n = n + (Complex{g / 2.0 * r * r} * Poly::linear(d + ig2, Complex{-1.0})) * M;
      n = n + (g * sm * r) * (Poly::linear(d - ig2, Complex{1.0}) *
                              (Poly::linear(d + ig2, Complex{-1.0}) * M -
                               Complex{r * r} * Poly::linear(Complex{0.0}, Complex{1.0}) *
                                   Poly::linear(d - ig2, Complex{-1.0})));
      n = n + (g * sp * r) * (Poly::linear(d + ig2, Complex{1.0}) *
                              (Poly::linear(d - ig2, Complex{-1.0}) * Mb -
                               Complex{r * r} * Poly::linear(Complex{0.0}, Complex{1.0}) *
                                   Poly::linear(d + ig2, Complex{-1.0})));
      return n;
    }
    case Component::ParametricZ: {
      if (r == 0.0) return Poly{};  // every term carries a power of rabi
      Poly n = (Complex{g / 2.0 * r * r} * Poly::linear(d + ig2, Complex{-1.0})) * M;
      n = n + (Complex{g / 2.0 * r * r} * Poly::linear(d + ig2, Complex{1.0})) * Mb;
      n = n + Poly::linear(Complex{0.0}, Complex{-g * r * r * r * r * d});
      n = n + (g * sm * r) * (Poly::linear(d - ig2, Complex{1.0}) *
                              Poly::linear(d + ig2, Complex{-1.0}) * M);
      n = n + (g * sm * r) * (Poly::linear(d - ig2, Complex{-1.0}) *
                              Poly::linear(d + ig2, Complex{1.0}) * Mb);
      n = n - (g * sm * r * r * r) * (Poly::linear(Complex{0.0}, Complex{1.0}) *
                                      Poly::linear(d - ig2, Complex{1.0}) *
                                      Poly::linear(d - ig2, Complex{-1.0}));
      n = n - (g * sp * r * r * r) * (Poly::linear(Complex{0.0}, Complex{1.0}) *
                                      Poly::linear(d + ig2, Complex{1.0}) *
                                      Poly::linear(d + ig2, Complex{-1.0}));
      return n;
    }
    case Component::Transverse: {
      const Complex ig = I * g;
      Poly n = Complex{16.0 * g} * (Poly::linear(ig, Complex{1.0}) * Poly::linear(-ig, Complex{1.0}));
      n = n + Poly::constant(Complex{4.0 * r * r * g * (0.5 + st.sigma_z)});
      n = n + (Complex{8.0 * r * g} * sm) * Poly::linear(ig, Complex{1.0});
      n = n + (Complex{8.0 * r * g} * sp) * Poly::linear(-ig, Complex{1.0});
      return n;
    }
  }
  return Poly{};
}

}  // namespace

SpectralKernel build_kernel(Component component, const DriveParams& p) {
  const double g = p.gamma, d = p.delta, r = p.rabi;
  SpectralKernel k{component, p, steady_state(p), Poly{}, Complex{1.0}, {}};
  k.numerator = build_numerator(component, p, k.steady);

  std::vector<Complex> roots;
  if (component == Component::Transverse) {
    // 4(d+w+ig/2)(w+ig) - r^2 = 0 and the coefficient-conjugated pair
    const Complex disc = std::sqrt((Complex{d} - I * (g / 2.0)) * (Complex{d} - I * (g / 2.0)) +
                                   Complex{r * r});
    const Complex r1 = -d / 2.0 - I * (0.75 * g) + disc / 2.0;
    const Complex r2 = -d / 2.0 - I * (0.75 * g) - disc / 2.0;
    roots = {r1, r2, std::conj(r1), std::conj(r2)};
    k.denom_const = Complex{16.0};
  } else {
    const TripletRoots t = triplet_roots(p);
    roots.reserve(8);
    if (component == Component::KerrZ) {
      roots.push_back(Complex{-d, -g / 2.0});
      roots.push_back(Complex{-d, +g / 2.0});
      k.denom_const = Complex{1.0};
    } else {
      roots.push_back(Complex{-d, -g / 2.0});
      roots.push_back(Complex{+d, +g / 2.0});
      k.denom_const = Complex{-1.0};
    }
    for (const Complex lam : t.lambda) roots.push_back(lam);
    for (const Complex lam : t.lambda) roots.push_back(std::conj(lam));
  }

  const double tol = 1e-10 * std::max({g, r, std::abs(d)});
  k.denom_factors = merge_roots(roots, tol);
  return k;
}

Complex eval_kernel(const SpectralKernel& k, Complex omega_prime) {
  if (k.numerator.is_zero()) return Complex{0.0};
  for (const auto& f : k.denom_factors) {
    if (std::abs(omega_prime - f.root) < 1e-13)
      throw EvaluationAtPole("eval_kernel: omega' within 1e-13 of a denominator root");
  }
  return k.numerator.eval(omega_prime) / k.denominator_at(omega_prime);
}

std::vector<std::pair<Complex, int>> kernel_poles(const SpectralKernel& k) {
  std::vector<std::pair<Complex, int>> out;
  out.reserve(k.denom_factors.size());
  for (const auto& f : k.denom_factors) out.emplace_back(f.root, f.multiplicity);
  return out;
}

}  // namespace mollow
