#include "mollow/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "mollow/quadrature.hpp"
#include "mollow/triplet.hpp"

namespace mollow {

Complex DriftSystem::det() const {
  const auto& a = matrix;
  if (dim == 2) return a[0][0] * a[1][1] - a[0][1] * a[1][0];
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

int DiffusionMatrix::adjoint_index(Channel ch, int q) {
  if (ch == Channel::MainZ) {
    switch (q) {
      case 0: return 1;  // + -> -
      case 1: return 0;  // - -> +
      case 2: return 2;  // Z -> Z
    }
  } else {
    switch (q) {
      case 0: return 1;  // +x -> -x
      case 1: return 0;
      case 2: return 3;  // xb -> bx
      case 3: return 2;
    }
  }
  throw std::out_of_range("adjoint_index");
}

DriftSystem drift_matrix(Channel channel, const DriveParams& p, Complex omega) {
  const double g = p.gamma, d = p.delta, r = p.rabi;
  DriftSystem s{};
  if (channel == Channel::MainZ) {
    s.dim = 3;
    s.matrix[0] = {d - omega - I * (g / 2.0), Complex{0.0}, Complex{-r}};
    s.matrix[1] = {Complex{0.0}, d + omega + I * (g / 2.0), Complex{-r}};
    s.matrix[2] = {Complex{r / 2.0}, Complex{-r / 2.0}, omega + I * g};
    s.source_signs = {-I, I, I};
  } else {
    s.dim = 2;
    s.matrix[0] = {d + omega - I * (g / 2.0), Complex{-r / 2.0}, Complex{0.0}};
    s.matrix[1] = {Complex{-r / 2.0}, omega - I * g, Complex{0.0}};
    s.source_signs = {-I, -I, Complex{0.0}};
  }
  return s;
}

DriftSystem satellite_conjugate(const DriveParams& p, Complex omega) {
  const double g = p.gamma, d = p.delta, r = p.rabi;
  DriftSystem s{};
  s.dim = 2;
  s.matrix[0] = {d + omega + I * (g / 2.0), Complex{-r / 2.0}, Complex{0.0}};
  s.matrix[1] = {Complex{-r / 2.0}, omega + I * g, Complex{0.0}};
  s.source_signs = {I, I, Complex{0.0}};
  return s;
}

DiffusionMatrix diffusion_matrix(Channel channel, const SteadyState& steady, double gamma) {
  DiffusionMatrix m{};
  m.channel = channel;
  const double h = gamma / 2.0;
  if (channel == Channel::MainZ) {
    m.dim = 3;
    m.d[0][0] = h;
    m.d[0][2] = h * steady.sigma_minus;
    m.d[2][0] = h * steady.sigma_plus;
    m.d[2][2] = h * (0.5 + steady.sigma_z);
  } else {
    m.dim = 4;
    m.d[0][0] = h;
    m.d[0][2] = h * steady.sigma_minus;
    m.d[2][0] = h * steady.sigma_plus;
    m.d[2][2] = h * (0.5 + steady.sigma_z);
  }
  return m;
}

namespace {

using Mat3 = std::array<std::array<Complex, 3>, 3>;

Mat3 inverse3(const DriftSystem& s) {
  const auto& a = s.matrix;
  const Complex det = s.det();
  if (std::abs(det) < 1e-13)
    throw SingularResolvent("oracle: |det A| < 1e-13 on the evaluation path");
  Mat3 inv;
  inv[0][0] = (a[1][1] * a[2][2] - a[1][2] * a[2][1]) / det;
  inv[0][1] = (a[0][2] * a[2][1] - a[0][1] * a[2][2]) / det;
  inv[0][2] = (a[0][1] * a[1][2] - a[0][2] * a[1][1]) / det;
  inv[1][0] = (a[1][2] * a[2][0] - a[1][0] * a[2][2]) / det;
  inv[1][1] = (a[0][0] * a[2][2] - a[0][2] * a[2][0]) / det;
  inv[1][2] = (a[0][2] * a[1][0] - a[0][0] * a[1][2]) / det;
  inv[2][0] = (a[1][0] * a[2][1] - a[1][1] * a[2][0]) / det;
  inv[2][1] = (a[0][1] * a[2][0] - a[0][0] * a[2][1]) / det;
  inv[2][2] = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / det;
  return inv;
}

Mat3 inverse2(const DriftSystem& s) {
  const auto& a = s.matrix;
  const Complex det = s.det();
  if (std::abs(det) < 1e-13)
    throw SingularResolvent("oracle: |det A| < 1e-13 on the evaluation path");
  Mat3 inv{};
  inv[0][0] = a[1][1] / det;
  inv[0][1] = -a[0][1] / det;
  inv[1][0] = -a[1][0] / det;
  inv[1][1] = a[0][0] / det;
  return inv;
}

// quadratic form sum_jk Xa[ia][j] Xb[ib][k] s_j s_k <F_j F_k>, the T-normalized
// pairing of the two resolvent solves through the delta-correlated moments
Complex pair_solves(const Mat3& xa, const DriftSystem& sys_a, int ia, const Mat3& xb,
                    const DriftSystem& sys_b, int ib, const DiffusionMatrix& dm,
                    const int* idx_a, const int* idx_b, int n) {
  Complex acc{0.0};
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      const Complex coeff = dm.product_coeff(idx_a[j], idx_b[k]);
      if (coeff == Complex{0.0}) continue;
      acc += xa[ia][j] * sys_a.source_signs[j] * xb[ib][k] * sys_b.source_signs[k] * coeff;
    }
  }
  return acc;
}

}  // namespace

Complex commutator_spectrum(Component component, const DriveParams& p, double omega_prime) {
  const SteadyState st = steady_state(p);

  if (component == Component::Transverse) {
    const DiffusionMatrix dm = diffusion_matrix(Channel::SatelliteX, st, p.gamma);
    const DriftSystem bsys = drift_matrix(Channel::SatelliteX, p, Complex{omega_prime});
    const DriftSystem csys = satellite_conjugate(p, Complex{omega_prime});
    const Mat3 binv = inverse2(bsys);
    const Mat3 cinv = inverse2(csys);
    // sigma_-^x(w') is row 0 of the conjugate system, sigma_+^x(-w') row 0 of
    // the printed one; noise indices (-x, bx) = (1,3) and (+x, xb) = (0,2)
    static const int idx_c[2] = {1, 3};
    static const int idx_b[2] = {0, 2};
    const Complex fwd = pair_solves(cinv, csys, 0, binv, bsys, 0, dm, idx_c, idx_b, 2);
    const Complex rev = pair_solves(binv, bsys, 0, cinv, csys, 0, dm, idx_b, idx_c, 2);
    return fwd - rev;
  }

  const DiffusionMatrix dm = diffusion_matrix(Channel::MainZ, st, p.gamma);
  const DriftSystem ap = drift_matrix(Channel::MainZ, p, Complex{omega_prime});
  const DriftSystem am = drift_matrix(Channel::MainZ, p, Complex{-omega_prime});
  const Mat3 ip = inverse3(ap);
  const Mat3 im = inverse3(am);
  static const int idx[3] = {0, 1, 2};

  if (component == Component::KerrZ) {
    // <[dsigma_-(w'), dsigma_+(-w')]>; rows: dsigma_- = 1, dsigma_+ = 0
    return pair_solves(ip, ap, 1, im, am, 0, dm, idx, idx, 3) -
           pair_solves(im, am, 0, ip, ap, 1, dm, idx, idx, 3);
  }
  // parametric: <[dsigma_-(w'), dsigma_-(-w')]>
  return pair_solves(ip, ap, 1, im, am, 1, dm, idx, idx, 3) -
         pair_solves(im, am, 1, ip, ap, 1, dm, idx, idx, 3);
}

Complex chi_oracle(Component component, const DriveParams& p, double omega,
                   const DensityScale& scale, double tol) {
  if (!(tol > 0.0) || tol > 1e-3)
    throw std::invalid_argument("chi_oracle: tol must lie in (0, 1e-3]");

  const double sign = component == Component::ParametricZ ? -1.0 : 1.0;
  const double c = sign * omega;
  const auto f = [&](double x) { return commutator_spectrum(component, p, x); };
  const Complex kc = f(c);

  PrincipalValueSpec spec;
  spec.center = c;
  spec.half_width = 10.0 * (p.rabi + p.gamma + std::abs(p.delta) + std::abs(omega));
  spec.abs_tol = tol;
  spec.rel_tol = tol;
  if (component == Component::Transverse) {
    const Complex disc = std::sqrt((Complex{p.delta} - I * (p.gamma / 2.0)) *
                                       (Complex{p.delta} - I * (p.gamma / 2.0)) +
                                   Complex{p.rabi * p.rabi});
    spec.breakpoints = {(-p.delta / 2.0 + disc.real() / 2.0), (-p.delta / 2.0 - disc.real() / 2.0)};
  } else {
    for (const Complex lam : triplet_roots(p).lambda) spec.breakpoints.push_back(lam.real());
    spec.breakpoints.push_back(-p.delta);
    spec.breakpoints.push_back(p.delta);
  }
  const Complex pv = principal_value_cauchy(f, spec);

  return -scale.scale * (pv / (2.0 * M_PI) - 0.5 * I * kc);
}

}  // namespace mollow
