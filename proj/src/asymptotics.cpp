#include "mollow/asymptotics.hpp"

#include <stdexcept>

namespace mollow {

Complex chi_weak(Component component, const DriveParams& p, double omega,
                 const DensityScale& scale) {
  const double g = p.gamma, d = p.delta, r = p.rabi;
  const Complex ig2 = I * (g / 2.0);
  switch (component) {
    case Component::KerrZ: {
      const Complex shift = r * r / (2.0 * (d - ig2));
      const double depletion = 1.0 - r * r / (2.0 * (d * d + g * g / 4.0));
      return -scale.scale * depletion / (omega + d + ig2 + shift);
    }
    case Component::ParametricZ: {
      const Complex om = Complex{omega} - ig2;
      return -scale.scale / 2.0 * (r * r) / ((om * om - d * d) * (d + ig2));
    }
    case Component::Transverse: {
      const Complex shift = r * r / (4.0 * (d - ig2));
      const double depletion = 1.0 - r * r / (4.0 * (d * d + g * g / 4.0));
      return -scale.scale * depletion / (omega + d + ig2 + shift);
    }
  }
  throw std::logic_error("chi_weak: bad component");
}

Complex chi_saturation_center(Component component, const DriveParams& p, double omega,
                              const DensityScale& scale) {
  const double g = p.gamma, d = p.delta, r = p.rabi;
  const Complex ig2 = I * (g / 2.0);
  if (component == Component::KerrZ)
    return scale.scale / 2.0 * (I * g) * (d + ig2) / (r * r * (omega + ig2));
  if (component == Component::ParametricZ)
    return scale.scale / 2.0 * (I * g) * (d - ig2) / (r * r * (-omega + ig2));
  throw std::invalid_argument("chi_saturation_center: defined for the z-channel components");
}

Complex chi_saturation_sideband(Component component, const DriveParams& p, double omega,
                                const DensityScale& scale, Sideband sideband) {
  const double g = p.gamma, d = p.delta, r = p.rabi;
  const Complex ig2 = I * (g / 2.0);
  Complex lambda = Complex{r, -0.75 * g};
  if (sideband == Sideband::Red) lambda = -std::conj(lambda);
  if (component == Component::KerrZ)
    return scale.scale / 2.0 * (d + ig2) / (r * (omega - lambda));
  if (component == Component::ParametricZ)
    return -scale.scale / 2.0 * (d - ig2) / (r * (-omega - lambda));
  throw std::invalid_argument("chi_saturation_sideband: defined for the z-channel components");
}

Complex chi_saturation_transverse(const DriveParams& p, double omega,
                                  const DensityScale& scale) {
  const double g = p.gamma, d = p.delta, r = p.rabi;
  const Complex w34 = I * (0.75 * g);
  return -scale.scale / 4.0 *
         (1.0 / (omega - r / 2.0 + d / 2.0 + w34) + 1.0 / (omega + r / 2.0 + d / 2.0 + w34));
}

}  // namespace mollow
