#ifndef MOLLOW_MODEL_HPP
#define MOLLOW_MODEL_HPP

#include "mollow/types.hpp"

namespace mollow {

/// Control-field / atom parameter set. All frequencies share one unit; the
/// library is homogeneous in gamma, so gamma = 1 is the natural choice.
struct DriveParams {
  double gamma;  ///< excited-state decay rate, > 0
  double delta;  ///< control-field detuning from the atomic transition
  double rabi;   ///< Rabi frequency of the control field, >= 0

  DriveParams(double gamma_, double delta_, double rabi_);
};

/// Mean pseudospin values of the driven two-level transition.
struct SteadyState {
  Complex sigma_minus;
  Complex sigma_plus;  // conjugate of sigma_minus
  double sigma_z;      // in [-1/2, 0)
  double s;            // saturation parameter
};

/// Dimensionless susceptibility prefactor n0*d0^2/(hbar*gamma) = 0.75*n0*lambdabar0^3.
struct DensityScale {
  double scale;
  explicit DensityScale(double scale_ = 1.0);
  /// Build from the dimensionless density n0*lambdabar0^3.
  static DensityScale from_density_lambda3(double n0_lambdabar3);
};

/// Saturation parameter s = (rabi^2/2) / (delta^2 + gamma^2/4).
double saturation(const DriveParams& p);

/// Inverse of saturation(): the Rabi frequency that produces saturation s.
double rabi_from_saturation(double s, double gamma, double delta);

/// Stationary solution of the optical Bloch equations. The rabi = 0 branch
/// returns sigma_minus = 0 exactly (s/(s+1) vanishes quadratically in rabi
/// while 1/rabi diverges only linearly).
SteadyState steady_state(const DriveParams& p);

/// Dense-medium rule for a transparent host (real permittivity epsilon >= 1):
/// gamma -> sqrt(epsilon) * gamma, detuning and Rabi frequency untouched.
DriveParams renormalize_dense(const DriveParams& p, double epsilon);

}  // namespace mollow

#endif
