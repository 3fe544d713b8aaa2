#ifndef MOLLOW_QUADRATURE_HPP
#define MOLLOW_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "mollow/types.hpp"

namespace mollow {

/// Globally adaptive Gauss-Kronrod 15(7) integration of a complex-valued
/// function over [a, b]. Throws ToleranceNotReached when the subdivision
/// budget is exhausted before |error| <= max(abs_tol, rel_tol * |I|).
Complex integrate_adaptive(const std::function<Complex(double)>& f, double a, double b,
                           double abs_tol, double rel_tol,
                           const std::vector<double>& breakpoints = {},
                           int max_intervals = 4000);

struct PrincipalValueSpec {
  double center;      ///< location of the simple pole on the real axis
  double half_width;  ///< window half-width W; tails beyond are folded in
  double abs_tol;
  double rel_tol;
  std::vector<double> breakpoints;  ///< feature locations (absolute coordinates)
};

/// PV integral over the whole real axis of f(x) / (center - x) for a smooth
/// f decaying at least like 1/x^2. The window part is folded around the pole
/// so the integrand stays bounded; the tails are mapped to a finite interval
/// by x -> 1/t.
Complex principal_value_cauchy(const std::function<Complex(double)>& f,
                               const PrincipalValueSpec& spec);

}  // namespace mollow

#endif
