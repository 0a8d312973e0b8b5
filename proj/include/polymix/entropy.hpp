// Tsallis entropy TE_alpha = (1 - int f^alpha) / (alpha - 1): exact
// closed form for integer alpha >= 2, adaptive quadrature for real
// alpha > 0, alpha != 1.

#pragma once

#include "polymix/family.hpp"

namespace polymix {

// Closed form via the alpha-fold self-convolution of the coefficient
// vector (degree alpha * p), summed in log space; algebraically equal to
// the (p+1)^alpha index-tuple sum at O(alpha p^2) cost. alpha must be an
// integer in [2, alpha_cap].
double tsallis_integer(const Family& f, int alpha, int alpha_cap = 8);

// (1 - int_0^inf pdf(x)^alpha dx) / (alpha - 1) by adaptive quadrature
// with a tail cutoff; for alpha < 1 and theta_0 = 0 the integrand's
// power-law onset at 0 is integrated in a smoothing substitution.
double tsallis_quadrature(const Family& f, double alpha, double tol = 1e-9);

// Dispatch: closed form when alpha is an integer in [2, alpha_cap],
// quadrature otherwise.
double tsallis(const Family& f, double alpha, double tol = 1e-9);

}  // namespace polymix
