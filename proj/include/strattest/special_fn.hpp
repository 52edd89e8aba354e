#pragma once

namespace strattest {

/// Convergence control for the incomplete gamma evaluations.
struct Tolerance {
  double eps = 1e-15;  // relative step threshold
  int max_iter = 500;
};

/// Standard normal CDF, evaluated through erfc so the tails keep
/// relative accuracy. Throws on non-finite input.
double std_normal_cdf(double z);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a,x)/Gamma(a).
/// Series expansion for x < a + 1, Lentz continued fraction otherwise.
/// Throws if the iteration cap is exhausted before convergence.
double regularized_gamma_q(double a, double x, const Tolerance& tol = {});

/// Survival function P(X >= t) for X ~ chi-squared(df), i.e.
/// Q(df/2, t/2). df must be positive, t non-negative.
double chi_squared_sf(double t, int df, const Tolerance& tol = {});

}  // namespace strattest
