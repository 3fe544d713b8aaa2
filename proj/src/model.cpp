#include "mollow/model.hpp"

#include <cmath>
#include <stdexcept>

namespace mollow {

DriveParams::DriveParams(double gamma_, double delta_, double rabi_)
    : gamma(gamma_), delta(delta_), rabi(rabi_) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw std::invalid_argument("DriveParams: gamma must be positive");
  if (!(rabi >= 0.0) || !std::isfinite(rabi))
    throw std::invalid_argument("DriveParams: rabi must be non-negative");
  if (!std::isfinite(delta))
    throw std::invalid_argument("DriveParams: delta must be finite");
}

DensityScale::DensityScale(double scale_) : scale(scale_) {
  if (!(scale >= 0.0) || !std::isfinite(scale))
    throw std::invalid_argument("DensityScale: scale must be non-negative");
}

DensityScale DensityScale::from_density_lambda3(double n0_lambdabar3) {
  return DensityScale(0.75 * n0_lambdabar3);
}

double saturation(const DriveParams& p) {
  return (p.rabi * p.rabi / 2.0) / (p.delta * p.delta + p.gamma * p.gamma / 4.0);
}

double rabi_from_saturation(double s, double gamma, double delta) {
  if (!(s >= 0.0)) throw std::domain_error("rabi_from_saturation: s must be non-negative");
  if (!(gamma > 0.0)) throw std::domain_error("rabi_from_saturation: gamma must be positive");
  return std::sqrt(2.0 * s * (delta * delta + gamma * gamma / 4.0));
}

SteadyState steady_state(const DriveParams& p) {
  SteadyState st;
  st.s = saturation(p);
  if (p.rabi == 0.0) {
    st.sigma_minus = Complex{0.0};
  } else {
    st.sigma_minus = -(p.delta - I * (p.gamma / 2.0)) / p.rabi * (st.s / (st.s + 1.0));
  }
  st.sigma_plus = std::conj(st.sigma_minus);
  st.sigma_z = -0.5 / (st.s + 1.0);
  return st;
}

DriveParams renormalize_dense(const DriveParams& p, double epsilon) {
  if (!(epsilon >= 1.0))
    throw std::domain_error("renormalize_dense: epsilon must be >= 1 (transparent medium)");
  return DriveParams(std::sqrt(epsilon) * p.gamma, p.delta, p.rabi);
}

}  // namespace mollow
