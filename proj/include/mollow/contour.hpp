#ifndef MOLLOW_CONTOUR_HPP
#define MOLLOW_CONTOUR_HPP

#include <vector>

#include "mollow/model.hpp"
#include "mollow/types.hpp"

namespace mollow {

/// One evaluated susceptibility point, in units of n0 d0^2 / (hbar gamma).
struct ChiSample {
  Component component;
  double omega;   ///< probe detuning from the control field
  Complex value;  ///< finite for all real omega
};

enum class Method {
  Residue,
  Quadrature,
  Oracle,
  Weak,
  SatCenter,
  SatSideband,
  SatTransverse,
};

const char* method_name(Method m);

struct SweepResult {
  Component component;
  DriveParams params;
  DensityScale scale;
  Method method;
  std::vector<ChiSample> samples;  // strictly ascending in omega
};

/// chi(omega) = -scale * Integral dw/2pi kernel(w) / (sigma*omega - w + i0),
/// sigma = -1 for the parametric component and +1 otherwise, evaluated
/// exactly by closing the contour in the upper half-plane. The prefactor
/// pole at w = sigma*omega + i0 is enclosed; kernel poles contribute with
/// their multiplicities (analytic derivative formulas up to multiplicity 3,
/// which is the degenerate rabi = 0, delta = 0 case).
Complex chi_residue(Component component, const DriveParams& p, double omega,
                    const DensityScale& scale);

/// Same integral through the Sokhotski-Plemelj split
///   1/(x + i0) = PV(1/x) - i pi delta(x),
/// with the principal value done by adaptive quadrature on a window of
/// half-width W = 10 (rabi + gamma + |delta| + |omega|) plus transformed
/// tail integrals. tol must lie in (0, 1e-3].
Complex chi_quadrature(Component component, const DriveParams& p, double omega,
                       const DensityScale& scale, double tol);

/// Evaluate chi on a strictly ascending grid. Residue/Quadrature/Oracle use
/// the exact kernels; the asymptotic methods are regression anchors and are
/// only produced when explicitly requested.
SweepResult sweep(Component component, const DriveParams& p,
                  const std::vector<double>& omega_grid, Method method,
                  const DensityScale& scale, double tol);

}  // namespace mollow

#endif
