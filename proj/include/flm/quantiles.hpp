#pragma once

namespace flm {

/// Standard normal quantile (inverse CDF), Wichura's AS 241 rational
/// approximations. p must lie in (0, 1).
double normal_quantile(double p);

/// Lower regularized incomplete gamma P(a, x).
double reg_gamma_p(double a, double x);

/// Chi-square quantile with dof degrees of freedom: inverse of the lower
/// regularized incomplete gamma, Wilson-Hilferty start plus safeguarded
/// Newton refinement.
double chi_square_quantile(int dof, double p);

}  // namespace flm
