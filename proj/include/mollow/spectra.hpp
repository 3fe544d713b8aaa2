#ifndef MOLLOW_SPECTRA_HPP
#define MOLLOW_SPECTRA_HPP

#include <utility>
#include <vector>

#include "mollow/model.hpp"
#include "mollow/poly.hpp"
#include "mollow/types.hpp"

namespace mollow {

/// One rational spectral kernel N(w)/D(w); D is kept factored for stable
/// evaluation near its roots and for residue bookkeeping.
struct SpectralKernel {
  struct Factor {
    Complex root;
    int multiplicity;
  };

  Component component;
  DriveParams params;
  SteadyState steady;
  Poly numerator;
  Complex denom_const;
  std::vector<Factor> denom_factors;  // near-coincident roots merged

  Complex denominator_at(Complex w) const {
    Complex d = denom_const;
    for (const auto& f : denom_factors)
      for (int k = 0; k < f.multiplicity; ++k) d *= (w - f.root);
    return d;
  }
};

/// Assemble the kernel for one susceptibility component. The numerator is
/// built term by term from its defining expression; the denominator is
/// [(d+w)^2 + g^2/4] |M|^2 (KerrZ), (d+w+ig/2)(d-w+ig/2) |M|^2 (ParametricZ),
/// or |4(d+w+ig/2)(w+ig) - r^2|^2 (Transverse), with |.|^2 realized as the
/// product of a polynomial and its coefficient-conjugated partner.
SpectralKernel build_kernel(Component component, const DriveParams& p);

/// N(w)/D(w) with the factored denominator. Throws EvaluationAtPole when w
/// is within 1e-13 of a denominator root.
Complex eval_kernel(const SpectralKernel& k, Complex omega_prime);

/// All denominator roots with multiplicities (>= 2 where roots coincide
/// within 1e-10 * max(gamma, rabi, |delta|)).
std::vector<std::pair<Complex, int>> kernel_poles(const SpectralKernel& k);

}  // namespace mollow

#endif
