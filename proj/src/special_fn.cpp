#include "strattest/special_fn.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace strattest {

namespace {

void check_tolerance(const Tolerance& tol) {
  if (!(tol.eps > 0.0)) throw std::invalid_argument("tolerance eps must be positive");
  if (tol.max_iter < 1) throw std::invalid_argument("tolerance max_iter must be at least 1");
}

// P(a,x) via the series x^a e^-x / Gamma(a) * sum_n x^n / (a(a+1)...(a+n)).
double gamma_p_series(double a, double x, const Tolerance& tol) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n <= tol.max_iter; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < tol.eps * std::abs(sum))
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  throw std::runtime_error("incomplete gamma series did not converge");
}

// Q(a,x) via the continued fraction (modified Lentz).
double gamma_q_cf(double a, double x, const Tolerance& tol) {
  constexpr double fpmin = std::numeric_limits<double>::min() / 1e-30;
  double b = x + 1.0 - a;
  double c = 1.0 / fpmin;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= tol.max_iter; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < fpmin) d = fpmin;
    c = b + an / c;
    if (std::abs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < tol.eps)
      return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
  }
  throw std::runtime_error("incomplete gamma continued fraction did not converge");
}

}  // namespace

double std_normal_cdf(double z) {
  if (!std::isfinite(z)) throw std::domain_error("non-finite argument");
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double regularized_gamma_q(double a, double x, const Tolerance& tol) {
  check_tolerance(tol);
  if (!(a > 0.0)) throw std::domain_error("gamma shape parameter must be positive");
  if (std::isnan(x) || x < 0.0) throw std::domain_error("negative incomplete gamma argument");
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) {
    const double p = gamma_p_series(a, x, tol);
    return p >= 1.0 ? 0.0 : 1.0 - p;
  }
  return gamma_q_cf(a, x, tol);
}

double chi_squared_sf(double t, int df, const Tolerance& tol) {
  if (df == 0) throw std::domain_error("zero degrees of freedom");
  if (df < 0) throw std::domain_error("negative degrees of freedom");
  if (std::isnan(t)) throw std::domain_error("non-finite statistic");
  if (t < 0.0) throw std::domain_error("negative statistic");
  return regularized_gamma_q(0.5 * df, 0.5 * t, tol);
}

}  // namespace strattest
