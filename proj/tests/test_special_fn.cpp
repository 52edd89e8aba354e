#include "strattest/special_fn.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include <stdexcept>

#include "doctest.h"

using namespace strattest;

namespace {

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST_CASE("normal cdf at zero and symmetry") {
  CHECK(std_normal_cdf(0.0) == 0.5);
  // Reference value from an independent high-precision erf evaluation.
  CHECK(std::abs(std_normal_cdf(-1.96) - 0.024997895148220434) < 1e-12);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> z_dist(-10.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const double z = z_dist(rng);
    CHECK(std_normal_cdf(z) + std_normal_cdf(-z) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("normal cdf is monotone and bounded") {
  double prev = 0.0;
  for (int i = 0; i <= 2000; ++i) {
    const double z = -40.0 + i * 0.04;
    const double p = std_normal_cdf(z);
    CHECK(p >= prev);
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
    prev = p;
  }
  CHECK(std_normal_cdf(-40.0) >= 0.0);
  CHECK(std_normal_cdf(40.0) == 1.0);
}

TEST_CASE("normal cdf rejects non-finite input") {
  CHECK_THROWS_WITH_AS(std_normal_cdf(std::numeric_limits<double>::quiet_NaN()),
                       "non-finite argument", std::domain_error);
  CHECK_THROWS_AS(std_normal_cdf(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("chi-squared sf closed form at two degrees of freedom") {
  CHECK(chi_squared_sf(0.0, 2) == 1.0);
  for (double t = 0.01; t <= 40.0; t += 0.37)
    CHECK(rel_err(chi_squared_sf(t, 2), std::exp(-t / 2)) < 1e-12);
  // exp(-16.75), frozen from an independent high-precision evaluation
  CHECK(rel_err(chi_squared_sf(33.5, 2), 5.3157852544244215e-8) < 1e-12);
}

TEST_CASE("chi-squared sf matches the normal tail at one degree of freedom") {
  const std::vector<std::pair<double, double>> cases{
      {0.5, 0.47950012218695346},
      {1.0, 0.3173105078629141},
      {4.0, 0.045500263896358414},
      {9.0, 0.0026997960632601891},
  };
  for (const auto& [t, want] : cases) {
    CHECK(rel_err(chi_squared_sf(t, 1), want) < 1e-13);
    CHECK(rel_err(chi_squared_sf(t, 1), 2.0 * std_normal_cdf(-std::sqrt(t))) < 1e-10);
  }
}

TEST_CASE("chi-squared sf is monotone, bounded, and 1 at zero") {
  for (int df : {1, 2, 3, 5, 10}) {
    CHECK(chi_squared_sf(0.0, df) == 1.0);
    double prev = 1.0;
    for (int i = 1; i <= 800; ++i) {
      const double t = i * 0.05;
      const double p = chi_squared_sf(t, df);
      CHECK(p <= prev + 1e-15);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      prev = p;
    }
  }
}

TEST_CASE("chi-squared sf error cases") {
  CHECK_THROWS_WITH_AS(chi_squared_sf(-1.0, 2), "negative statistic", std::domain_error);
  CHECK_THROWS_WITH_AS(chi_squared_sf(1.0, 0), "zero degrees of freedom", std::domain_error);
  CHECK_THROWS_AS(chi_squared_sf(std::numeric_limits<double>::quiet_NaN(), 2),
                  std::domain_error);
}

TEST_CASE("tolerance validation and iteration cap") {
  CHECK_THROWS_AS(regularized_gamma_q(1.0, 2.0, Tolerance{0.0, 500}), std::invalid_argument);
  CHECK_THROWS_AS(regularized_gamma_q(1.0, 2.0, Tolerance{1e-15, 0}), std::invalid_argument);
  // A cap of one iteration cannot converge either branch.
  CHECK_THROWS_AS(regularized_gamma_q(25.0, 20.0, Tolerance{1e-15, 1}), std::runtime_error);
  CHECK_THROWS_AS(regularized_gamma_q(0.5, 2.0, Tolerance{1e-15, 1}), std::runtime_error);
}

TEST_CASE("regularized gamma q endpoints") {
  CHECK(regularized_gamma_q(3.0, 0.0) == 1.0);
  CHECK(regularized_gamma_q(3.0, std::numeric_limits<double>::infinity()) == 0.0);
  CHECK_THROWS_AS(regularized_gamma_q(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(regularized_gamma_q(1.0, -1.0), std::domain_error);
}
