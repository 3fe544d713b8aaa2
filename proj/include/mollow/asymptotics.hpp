#ifndef MOLLOW_ASYMPTOTICS_HPP
#define MOLLOW_ASYMPTOTICS_HPP

#include "mollow/model.hpp"
#include "mollow/types.hpp"

namespace mollow {

enum class Sideband { Blue, Red };

/// Weak-nonlinearity (s << 1) closed forms. Regression anchors only; the
/// tested window is s <= 0.1.
Complex chi_weak(Component component, const DriveParams& p, double omega,
                 const DensityScale& scale);

/// Saturation-limit (s >> 1) central-feature closed forms for the z-channel
/// components, keeping only the quasi-energy pole contributions. Tested
/// window |omega| <= gamma. They capture Re chi of the Kerr component and
/// the shape of the parametric one; right at omega = 0 the exact integrals
/// develop additional cancellations these expressions do not resolve (the
/// exact Kerr value there is 2i*scale/(gamma (1+s)^2)).
Complex chi_saturation_center(Component component, const DriveParams& p, double omega,
                              const DensityScale& scale);

/// Saturation-limit behavior near the Mollow sidebands, with
/// Lambda = +rabi - 3i gamma/4 (blue); the red sideband follows from the
/// replacement Lambda -> -conj(Lambda).
Complex chi_saturation_sideband(Component component, const DriveParams& p, double omega,
                                const DensityScale& scale, Sideband sideband);

/// Saturation-limit transverse response: the equally weighted Autler-Townes
/// doublet at omega = +-rabi/2 - delta/2 with width 3 gamma / 4.
Complex chi_saturation_transverse(const DriveParams& p, double omega,
                                  const DensityScale& scale);

}  // namespace mollow

#endif
