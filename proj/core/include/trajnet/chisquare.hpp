#pragma once

namespace trajnet {

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

/// Upper tail of the chi-square distribution with `dof` degrees of freedom.
/// dof = 0 is treated as a point mass at zero (returns 1 for x <= 0, else 0).
double chi_square_sf(double x, double dof);

}  // namespace trajnet
