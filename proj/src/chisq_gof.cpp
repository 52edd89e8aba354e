#include "strattest/chisq_gof.hpp"

#include <stdexcept>

#include "strattest/special_fn.hpp"

namespace strattest {

GofTestResult chi_squared_gof(const MixedStrategy& target, const CountVector& counts) {
  if (!(target.alphabet() == counts.alphabet()))
    throw std::invalid_argument("target and counts use different alphabets");
  const long long n = counts.total();
  if (n == 0) throw std::domain_error("no observations");

  GofTestResult result;
  const int k = target.size();
  result.expected.resize(static_cast<size_t>(k));
  int included = 0;
  for (int j = 0; j < k; ++j) {
    const double pj = target.prob(j);
    const double expected_j = static_cast<double>(n) * pj;
    result.expected[static_cast<size_t>(j)] = expected_j;
    if (pj > 0.0) {
      ++included;
      const double diff = static_cast<double>(counts.count(j)) - expected_j;
      result.statistic += diff * diff / expected_j;
      if (expected_j < 5.0) result.small_expected = true;
    } else if (counts.count(j) > 0) {
      result.zero_probability_violation = true;
    }
  }
  result.df = included - 1;

  if (result.zero_probability_violation) {
    result.p_value = 0.0;
    return result;
  }
  if (result.df == 0) {
    // Point-mass target and every observation in that category.
    result.degenerate = true;
    result.p_value = 1.0;
    return result;
  }
  result.p_value = chi_squared_sf(result.statistic, result.df);
  return result;
}

}  // namespace strattest
