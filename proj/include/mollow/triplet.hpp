#ifndef MOLLOW_TRIPLET_HPP
#define MOLLOW_TRIPLET_HPP

#include <array>

#include "mollow/model.hpp"
#include "mollow/poly.hpp"
#include "mollow/types.hpp"

namespace mollow {

/// M(w) = c3 w^3 + c2 w^2 + c1 w + c0 with c3 = -1 exactly.
struct CubicPoly {
  std::array<Complex, 4> c;  // ascending: c[k] multiplies w^k

  Complex eval(Complex w) const { return ((c[3] * w + c[2]) * w + c[1]) * w + c[0]; }
  Complex eval_derivative(Complex w) const { return (3.0 * c[3] * w + 2.0 * c[2]) * w + c[1]; }
  Poly as_poly() const { return Poly({c[0], c[1], c[2], c[3]}); }
};

enum class Regime { SubThreshold, Triplet };

/// Quasi-energies Lambda_m = Omega_m - i Gamma_m of the driven transition,
/// ordered by ascending real part (ties by ascending imaginary part).
struct TripletRoots {
  std::array<Complex, 3> lambda;
  Regime regime;

  Complex lambda1() const { return lambda[0]; }
  Complex lambda2() const { return lambda[1]; }
  Complex lambda3() const { return lambda[2]; }
};

/// Scale-aware tolerance for classifying a root as purely imaginary.
double center_tolerance(const DriveParams& p);

/// Cubic whose roots are the Mollow-triplet resonance positions:
/// M(w) = i g/2 [d^2 - (w + i g/2)^2] + (w + i g/2)[d^2 - (w + i g/2)^2 + r^2].
CubicPoly mollow_poly(const DriveParams& p);

/// The three complex roots of mollow_poly(p), polished to
/// |M(Lambda)| <= 1e-12 * max(1, rabi^3). At delta = 0 the exact
/// factorization M = -z (z^2 + i g z/2 - r^2), z = w + i g/2, is used.
TripletRoots triplet_roots(const DriveParams& p);

/// Saturation-limit asymptotic roots {-rabi - 3ig/4, -ig/2, +rabi - 3ig/4}.
TripletRoots triplet_roots_saturation(const DriveParams& p);

}  // namespace mollow

#endif
