#pragma once

namespace twoarm {

/// Natural log of the Gamma function, x > 0. Lanczos approximation, good to
/// roughly full double precision in relative terms.
double ln_gamma(double x);

/// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1].
/// Continued-fraction evaluation with the usual symmetry switch at
/// x > (a + 1)/(a + b + 2); absolute error well below 1e-10.
double reg_inc_beta(double a, double b, double x);

/// Standard normal CDF.
double normal_cdf(double z);

/// Standard normal quantile (inverse CDF) for p in (0, 1). Wichura's
/// AS 241 PPND16 rational approximations.
double normal_quantile(double p);

/// CDF of Student's t with df > 0 degrees of freedom.
double student_t_cdf(double t, double df);

/// CDF of Fisher's F with (df1, df2) degrees of freedom, f >= 0.
double f_cdf(double f, double df1, double df2);

/// Two-sided p-value for a t statistic: 2 * P(T <= -|t|).
double two_sided_t_p_value(double t, double df);

}  // namespace twoarm
