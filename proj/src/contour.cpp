#include "mollow/contour.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mollow/asymptotics.hpp"
#include "mollow/oracle.hpp"
#include "mollow/quadrature.hpp"
#include "mollow/spectra.hpp"

namespace mollow {

const char* method_name(Method m) {
  switch (m) {
    case Method::Residue: return "residue";
    case Method::Quadrature: return "quadrature";
    case Method::Oracle: return "oracle";
    case Method::Weak: return "weak";
    case Method::SatCenter: return "sat-center";
    case Method::SatSideband: return "sat-sideband";
    case Method::SatTransverse: return "sat-transverse";
  }
  return "?";
}

namespace {

double prefactor_sign(Component c) { return c == Component::ParametricZ ? -1.0 : 1.0; }

// residue of N(w) / (denom(w) * (c - w)) at a pole p of multiplicity m,
// where g is the denominator deflated by (w - p)^m.
Complex pole_residue(const SpectralKernel& k, const SpectralKernel::Factor& pole, Complex c) {
  const Complex p = pole.root;
  Complex g = k.denom_const;
  Complex log_d1{0.0};  // g'/g = sum m_j / (p - r_j)
  Complex log_d2{0.0};  // sum m_j / (p - r_j)^2
  for (const auto& f : k.denom_factors) {
    if (&f == &pole) continue;
    const Complex dr = p - f.root;
    for (int j = 0; j < f.multiplicity; ++j) g *= dr;
    log_d1 += double(f.multiplicity) / dr;
    log_d2 += double(f.multiplicity) / (dr * dr);
  }
  const Complex v = 1.0 / (c - p);
  const Complex q = 1.0 / (g * (c - p));
  const Complex qp = q * (v - log_d1);
  const Complex n0 = k.numerator.eval(p);
  if (pole.multiplicity == 1) return n0 * q;

  const Poly dN = k.numerator.derivative();
  const Complex n1 = dN.eval(p);
  if (pole.multiplicity == 2) return n1 * q + n0 * qp;

  if (pole.multiplicity == 3) {
    const Complex n2 = dN.derivative().eval(p);
    const Complex qpp = qp * (v - log_d1) + q * (v * v + log_d2);
    return 0.5 * (n2 * q + 2.0 * n1 * qp + n0 * qpp);
  }
  throw std::runtime_error("pole_residue: multiplicity > 3 (parameter corruption?)");
}

Complex chi_residue_from_kernel(const SpectralKernel& k, double omega, double scale) {
  const double c = prefactor_sign(k.component) * omega;
  if (k.numerator.is_zero()) return Complex{0.0};

  for (const auto& f : k.denom_factors) {
    if (std::abs(f.root.imag()) < 1e-12) {
      std::ostringstream os;
      os << "chi_residue: kernel pole within 1e-12 of the real axis at " << f.root.real();
      throw DegenerateContour(os.str());
    }
  }

  // prefactor pole at w = c + i0 is inside the upper contour
  Complex total = -eval_kernel(k, Complex{c, 0.0});
  for (const auto& f : k.denom_factors) {
    if (f.root.imag() > 0.0) total += pole_residue(k, f, Complex{c, 0.0});
  }
  return -scale * I * total;
}

// near-degenerate (but unmerged) pole pairs make simple-pole residues
// ill-conditioned; detect them so the caller can sidestep by perturbation
bool has_near_degenerate_pair(const SpectralKernel& k) {
  const double s = std::max({k.params.gamma, k.params.rabi, std::abs(k.params.delta)});
  const double lo = 1e-10 * s, hi = 1e-6 * s;
  for (std::size_t i = 0; i < k.denom_factors.size(); ++i) {
    for (std::size_t j = i + 1; j < k.denom_factors.size(); ++j) {
      const double d = std::abs(k.denom_factors[i].root - k.denom_factors[j].root);
      if (d > lo && d < hi) return true;
    }
  }
  return false;
}

double quad_window(const DriveParams& p, double omega) {
  return 10.0 * (p.rabi + p.gamma + std::abs(p.delta) + std::abs(omega));
}

std::vector<double> feature_breakpoints(const SpectralKernel& k) {
  std::vector<double> pts;
  for (const auto& f : k.denom_factors) pts.push_back(f.root.real());
  return pts;
}

}  // namespace

Complex chi_residue(Component component, const DriveParams& p, double omega,
                    const DensityScale& scale) {
  SpectralKernel k = build_kernel(component, p);
  if (!has_near_degenerate_pair(k)) return chi_residue_from_kernel(k, omega, scale.scale);

  // split the almost-merged pair and average the two shifted evaluations;
  // the induced error is O((1e-8 gamma)^2 d2chi/ddelta2)
  const double h = 1e-8 * p.gamma;
  const SpectralKernel kp = build_kernel(component, DriveParams(p.gamma, p.delta + h, p.rabi));
  const SpectralKernel km = build_kernel(component, DriveParams(p.gamma, p.delta - h, p.rabi));
  return 0.5 * (chi_residue_from_kernel(kp, omega, scale.scale) +
                chi_residue_from_kernel(km, omega, scale.scale));
}

Complex chi_quadrature(Component component, const DriveParams& p, double omega,
                       const DensityScale& scale, double tol) {
  if (!(tol > 0.0) || tol > 1e-3)
    throw std::invalid_argument("chi_quadrature: tol must lie in (0, 1e-3]");
  const SpectralKernel k = build_kernel(component, p);
  if (k.numerator.is_zero()) return Complex{0.0};

  const double c = prefactor_sign(component) * omega;
  const auto f = [&k](double x) { return eval_kernel(k, Complex{x, 0.0}); };
  const Complex kc = f(c);

  PrincipalValueSpec spec;
  spec.center = c;
  spec.half_width = quad_window(p, omega);
  spec.abs_tol = tol;
  spec.rel_tol = tol;
  spec.breakpoints = feature_breakpoints(k);
  const Complex pv = principal_value_cauchy(f, spec);

  const double two_pi = 2.0 * M_PI;
  return -scale.scale * (pv / two_pi - 0.5 * I * kc);
}

SweepResult sweep(Component component, const DriveParams& p,
                  const std::vector<double>& omega_grid, Method method,
                  const DensityScale& scale, double tol) {
  if (omega_grid.empty()) throw std::invalid_argument("sweep: empty omega grid");
  for (std::size_t i = 1; i < omega_grid.size(); ++i)
    if (!(omega_grid[i] > omega_grid[i - 1]))
      throw std::invalid_argument("sweep: omega grid must be strictly ascending");

  SweepResult out{component, p, scale, method, {}};
  out.samples.reserve(omega_grid.size());
  for (double w : omega_grid) {
    Complex v;
    try {
      switch (method) {
        case Method::Residue: v = chi_residue(component, p, w, scale); break;
        case Method::Quadrature: v = chi_quadrature(component, p, w, scale, tol); break;
        case Method::Oracle: v = chi_oracle(component, p, w, scale, tol); break;
        case Method::Weak: v = chi_weak(component, p, w, scale); break;
        case Method::SatCenter: v = chi_saturation_center(component, p, w, scale); break;
        case Method::SatSideband:
          v = chi_saturation_sideband(component, p, w, scale,
                                      w >= 0.0 ? Sideband::Blue : Sideband::Red);
          break;
        case Method::SatTransverse: v = chi_saturation_transverse(p, w, scale); break;
      }
    } catch (const std::exception& e) {
      std::ostringstream os;
      os << "sweep failed at omega = " << w << ": " << e.what();
      throw std::runtime_error(os.str());
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream os;
      os << "sweep produced a non-finite value at omega = " << w;
      throw std::runtime_error(os.str());
    }
    out.samples.push_back({component, w, v});
  }
  return out;
}

}  // namespace mollow
