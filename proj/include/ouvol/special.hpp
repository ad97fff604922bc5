#pragma once

#include "ouvol/rng.hpp"

namespace ouvol {

double normal_pdf(double x, double mean, double var);
double log_normal_pdf(double x, double mean, double var);
double normal_cdf(double x); // standard normal

/// Upper incomplete gamma Γ(a, x), a > 0.
double upper_gamma(double a, double x);
/// Γ(-α, x) for 0 < α < 1, x > 0, via the recurrence from Γ(1-α, x).
double upper_gamma_neg(double alpha, double x);
/// Exponential integral E1(x), x > 0.
double expint_e1(double x);

/// Density at x of the standard positive α-stable law (Laplace transform
/// exp(-ω^α), 0 < α < 1), computed from the Zolotarev-Kanter integral
/// representation with a power-series tail for large x. `fast` trades the
/// adaptive integration for a fixed rule (~1e-6 relative, for hot loops).
double stable_std_density(double alpha, double x, bool fast = false);

/// Closed-form density of the α=1/2 law with Laplace transform exp(-k√ω):
/// k/(2√π) t^{-3/2} exp(-k²/(4t)).
double stable_half_density(double k, double t);

/// Exact draw from the standard positive α-stable law (Kanter's method).
double stable_std_sample(double alpha, Rng& rng);

/// Approximate [p_lo, p_hi] quantile bracket of the standard α-stable law,
/// wide rather than exact (used to size tabulation grids).
void stable_std_quantile_bracket(double alpha, double p_lo, double p_hi,
                                 double& x_lo, double& x_hi);

/// Survival function of the Kolmogorov distribution, Q(x)=2Σ(-1)^{j-1}e^{-2j²x²}.
double kolmogorov_sf(double x);

} // namespace ouvol
