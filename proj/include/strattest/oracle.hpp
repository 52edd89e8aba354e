#pragma once

#include <map>

#include "strattest/core.hpp"

namespace strattest::oracle {

// Brute-force references for validating the analytic test statistics.
// These enumerations are exact but factorially expensive; they are meant
// for test fixtures and calibration studies, not for the production path.

struct RunCountDistribution {
  CountVector counts;
  std::map<long long, double> pmf;  // run count -> exact probability

  double mean() const;
  double variance() const;
};

/// Exact distribution of the run count over all distinct arrangements of
/// the multiset described by `counts`, each arrangement equally likely.
/// Bounded at total <= 12; larger inputs are a hard error.
RunCountDistribution exact_run_distribution(const CountVector& counts);

/// Exact Type-I error of the chi-squared goodness-of-fit component at
/// level alpha: sums the multinomial probabilities of every count vector
/// the test rejects when sampling n plays from `target`. Bounded at
/// k <= 4, n <= 20.
double exact_multinomial_rejection_rate(const MixedStrategy& target, int n, double alpha);

}  // namespace strattest::oracle
