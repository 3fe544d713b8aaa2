#ifndef MOLLOW_ORACLE_HPP
#define MOLLOW_ORACLE_HPP

#include <array>

#include "mollow/model.hpp"
#include "mollow/types.hpp"

namespace mollow {

/// Fourier-domain Heisenberg-Langevin channels: the driven (+,-,Z) system and
/// the satellite x-polarized system.
enum class Channel { MainZ, SatelliteX };

/// Coefficient matrix of the algebraic Fourier-domain equations, together
/// with the per-row sign of the noise forcing ((-i, +i, +i) for the main
/// channel, (-i, -i) for the satellite channel).
struct DriftSystem {
  int dim;  // 3 for MainZ, 2 for SatelliteX
  std::array<std::array<Complex, 3>, 3> matrix;
  std::array<Complex, 3> source_signs;

  Complex det() const;
};

/// Noise second-moment coefficients D_{qq'}: <F_q^dag(t) F_q'(t')> =
/// 2 D_{qq'} delta(t - t'). Index order (+, -, Z) for the main channel and
/// (+x, -x, xb, bx) for the satellite channel.
struct DiffusionMatrix {
  Channel channel;
  int dim;  // 3 or 4
  std::array<std::array<Complex, 4>, 4> d;

  /// q-bar of the adjoint symmetry F_q = F_{qbar}^dag (swaps +/- and xb/bx,
  /// fixes Z); applying it twice is the identity.
  static int adjoint_index(Channel ch, int q);

  /// Coefficient of <F_q F_q'> = <F_{qbar}^dag F_q'> = 2 D_{qbar q'}.
  Complex product_coeff(int q, int qp) const {
    return 2.0 * d[adjoint_index(channel, q)][qp];
  }
};

/// Drift matrix value at (possibly complex) omega. MainZ acts on
/// (dsigma_+, dsigma_-, dsigma_Z); SatelliteX is the system for
/// (sigma_+^x, |x><b|) evaluated at -omega.
DriftSystem drift_matrix(Channel channel, const DriveParams& p, Complex omega);

/// Coefficient-conjugated satellite system, governing (sigma_-^x, |b><x|)
/// at +omega; its forcing signs are (+i, +i).
DriftSystem satellite_conjugate(const DriveParams& p, Complex omega);

DiffusionMatrix diffusion_matrix(Channel channel, const SteadyState& steady, double gamma);

/// Commutator spectral density of the component at real omega', assembled
/// from two resolvent solves and the white-noise moment rule. This never
/// touches the closed-form numerators/denominators of the spectra module.
Complex commutator_spectrum(Component component, const DriveParams& p, double omega_prime);

/// Plemelj-split quadrature of the oracle spectrum: an evaluation path for
/// chi that is end-to-end independent of the spectra module and the residue
/// calculus.
Complex chi_oracle(Component component, const DriveParams& p, double omega,
                   const DensityScale& scale, double tol);

}  // namespace mollow

#endif
