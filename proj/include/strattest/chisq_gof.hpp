#pragma once

#include <vector>

#include "strattest/core.hpp"

namespace strattest {

struct GofTestResult {
  double statistic = 0.0;        // T = sum (n_j - n p_j)^2 / (n p_j)
  int df = 0;                    // included categories minus one
  double p_value = 1.0;
  std::vector<double> expected;  // n * p_j over the full alphabet

  // Warnings; the test result itself is never modified by them.
  bool small_expected = false;           // some included n*p_j < 5
  bool zero_probability_violation = false;  // observation in a p_j == 0 category
  bool degenerate = false;               // point-mass target matched exactly
};

/// Goodness-of-fit test of observed counts against target probabilities.
/// Categories with p_j == 0 are excluded from the statistic and from the
/// degrees of freedom; any observation in such a category makes the
/// hypothesis impossible and forces p = 0.
GofTestResult chi_squared_gof(const MixedStrategy& target, const CountVector& counts);

}  // namespace strattest
