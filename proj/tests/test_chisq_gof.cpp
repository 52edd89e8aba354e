#include "strattest/chisq_gof.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <stdexcept>

#include "doctest.h"
#include "strattest/oracle.hpp"
#include "strattest/special_fn.hpp"
#include "test_util.hpp"

using namespace strattest;
using namespace strattest::testing;

TEST_CASE("gof reproduces the 25/60/15 example") {
  const MixedStrategy uniform = MixedStrategy::uniform(rps_alphabet());
  const GofTestResult result =
      chi_squared_gof(uniform, CountVector(rps_alphabet(), {25, 60, 15}));
  CHECK(result.statistic == doctest::Approx(33.5).epsilon(1e-12));
  CHECK(result.df == 2);
  CHECK(result.p_value == doctest::Approx(5.3157852544244215e-8).epsilon(1e-12));
  CHECK_FALSE(result.small_expected);
  CHECK_FALSE(result.zero_probability_violation);
}

TEST_CASE("gof is zero when counts equal expectations") {
  const MixedStrategy target(rps_alphabet(), {0.25, 0.5, 0.25});
  const GofTestResult result =
      chi_squared_gof(target, CountVector(rps_alphabet(), {10, 20, 10}));
  CHECK(result.statistic == 0.0);
  CHECK(result.p_value == 1.0);
  CHECK(result.expected == std::vector<double>{10, 20, 10});
}

TEST_CASE("observation in a zero-probability category forces p = 0") {
  const MixedStrategy point = MixedStrategy::pure(rps_alphabet(), 0);
  const GofTestResult result =
      chi_squared_gof(point, CountVector(rps_alphabet(), {5, 1, 0}));
  CHECK(result.p_value == 0.0);
  CHECK(result.zero_probability_violation);
}

TEST_CASE("point-mass target matched exactly is degenerate with p = 1") {
  const MixedStrategy point = MixedStrategy::pure(rps_alphabet(), 0);
  const GofTestResult result =
      chi_squared_gof(point, CountVector(rps_alphabet(), {6, 0, 0}));
  CHECK(result.p_value == 1.0);
  CHECK(result.df == 0);
  CHECK(result.degenerate);
}

TEST_CASE("zero-probability categories are excluded from the statistic") {
  const MixedStrategy half(rps_alphabet(), {0.5, 0.5, 0.0});
  const GofTestResult result =
      chi_squared_gof(half, CountVector(rps_alphabet(), {30, 10, 0}));
  CHECK(result.df == 1);
  CHECK(result.statistic == doctest::Approx(10.0));  // (30-20)^2/20 + (10-20)^2/20
  CHECK_FALSE(result.zero_probability_violation);
}

TEST_CASE("gof error cases") {
  const MixedStrategy uniform = MixedStrategy::uniform(rps_alphabet());
  CHECK_THROWS_WITH_AS(chi_squared_gof(uniform, CountVector(rps_alphabet(), {0, 0, 0})),
                       "no observations", std::domain_error);
  CHECK_THROWS_AS(chi_squared_gof(MixedStrategy::uniform(ActionAlphabet(2)),
                                  CountVector(rps_alphabet(), {1, 1, 1})),
                  std::invalid_argument);
}

TEST_CASE("small expected counts warn without changing the result") {
  const MixedStrategy uniform = MixedStrategy::uniform(rps_alphabet());
  const GofTestResult small =
      chi_squared_gof(uniform, CountVector(rps_alphabet(), {4, 4, 1}));
  CHECK(small.small_expected);
  CHECK(small.statistic == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(small.p_value == doctest::Approx(0.36787944117144233).epsilon(1e-12));
}

TEST_CASE("simultaneous permutation leaves the test unchanged") {
  std::mt19937_64 rng(51);
  std::vector<int> order{0, 1, 2};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> probs{0.2, 0.5, 0.3};
    std::vector<long long> counts{static_cast<long long>(rng() % 30),
                                  static_cast<long long>(1 + rng() % 30),
                                  static_cast<long long>(rng() % 30)};
    const GofTestResult base = chi_squared_gof(MixedStrategy(rps_alphabet(), probs),
                                               CountVector(rps_alphabet(), counts));
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<double> probs_p(3);
    std::vector<long long> counts_p(3);
    for (int j = 0; j < 3; ++j) {
      probs_p[static_cast<size_t>(j)] = probs[static_cast<size_t>(order[j])];
      counts_p[static_cast<size_t>(j)] = counts[static_cast<size_t>(order[j])];
    }
    const GofTestResult permuted = chi_squared_gof(MixedStrategy(rps_alphabet(), probs_p),
                                                   CountVector(rps_alphabet(), counts_p));
    CHECK(permuted.statistic == doctest::Approx(base.statistic).epsilon(1e-12));
    CHECK(permuted.df == base.df);
    CHECK(permuted.p_value == doctest::Approx(base.p_value).epsilon(1e-12));
  }
}

TEST_CASE("doubling counts under a uniform target doubles the statistic") {
  const MixedStrategy uniform = MixedStrategy::uniform(rps_alphabet());
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<long long> counts{static_cast<long long>(1 + rng() % 40),
                                  static_cast<long long>(rng() % 40),
                                  static_cast<long long>(rng() % 40)};
    std::vector<long long> doubled;
    for (long long c : counts) doubled.push_back(2 * c);
    const double t1 =
        chi_squared_gof(uniform, CountVector(rps_alphabet(), counts)).statistic;
    const double t2 =
        chi_squared_gof(uniform, CountVector(rps_alphabet(), doubled)).statistic;
    CHECK(t2 == doctest::Approx(2 * t1).epsilon(1e-12));
  }
}

TEST_CASE("statistic is zero only at exact agreement") {
  const MixedStrategy target(rps_alphabet(), {0.25, 0.5, 0.25});
  CHECK(chi_squared_gof(target, CountVector(rps_alphabet(), {1, 2, 1})).statistic == 0.0);
  CHECK(chi_squared_gof(target, CountVector(rps_alphabet(), {2, 1, 1})).statistic > 0.0);
}

TEST_CASE("sampled rejection rate agrees with the exact enumeration") {
  const MixedStrategy uniform = MixedStrategy::uniform(rps_alphabet());
  const int n = 8;
  const double alpha = 0.05;
  const double exact = oracle::exact_multinomial_rejection_rate(uniform, n, alpha);

  std::mt19937_64 rng(53);
  const int trials = 100000;
  int rejected = 0;
  for (int t = 0; t < trials; ++t) {
    std::vector<long long> counts(3, 0);
    for (int i = 0; i < n; ++i) ++counts[rng() % 3];
    const GofTestResult r = chi_squared_gof(uniform, CountVector(rps_alphabet(), counts));
    if (r.p_value <= alpha) ++rejected;
  }
  const double rate = static_cast<double>(rejected) / trials;
  const double se = std::sqrt(exact * (1 - exact) / trials);
  CHECK(std::abs(rate - exact) < 3 * se + 1e-12);
}
