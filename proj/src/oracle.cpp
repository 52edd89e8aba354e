#include "strattest/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "strattest/chisq_gof.hpp"

namespace strattest::oracle {

double RunCountDistribution::mean() const {
  double m = 0.0;
  for (const auto& [r, p] : pmf) m += static_cast<double>(r) * p;
  return m;
}

double RunCountDistribution::variance() const {
  const double m = mean();
  double v = 0.0;
  for (const auto& [r, p] : pmf) {
    const double d = static_cast<double>(r) - m;
    v += d * d * p;
  }
  return v;
}

RunCountDistribution exact_run_distribution(const CountVector& counts) {
  const long long n = counts.total();
  if (n < 1) throw std::domain_error("empty count vector has no arrangements");
  if (n > 12) throw std::domain_error("enumeration bound exceeded");

  std::vector<int> arrangement;
  arrangement.reserve(static_cast<size_t>(n));
  for (int j = 0; j < counts.size(); ++j)
    arrangement.insert(arrangement.end(), static_cast<size_t>(counts.count(j)), j);

  // next_permutation over the sorted multiset visits each distinct
  // arrangement exactly once; tallies stay exact integers.
  std::map<long long, std::uint64_t> tally;
  std::uint64_t total = 0;
  do {
    long long runs = 1;
    for (size_t i = 1; i < arrangement.size(); ++i)
      if (arrangement[i] != arrangement[i - 1]) ++runs;
    ++tally[runs];
    ++total;
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));

  RunCountDistribution dist{counts, {}};
  for (const auto& [r, w] : tally)
    dist.pmf[r] = static_cast<double>(w) / static_cast<double>(total);
  return dist;
}

namespace {

// Exact multinomial coefficient n! / prod(counts!), valid well past the
// n <= 20 enumeration bound.
std::uint64_t multinomial_coefficient(long long n, const std::vector<long long>& counts) {
  std::uint64_t coeff = 1;
  long long remaining = n;
  for (long long c : counts) {
    // coeff *= C(remaining, c)
    std::uint64_t binom = 1;
    for (long long i = 1; i <= c; ++i)
      binom = binom * static_cast<std::uint64_t>(remaining - c + i) / static_cast<std::uint64_t>(i);
    coeff *= binom;
    remaining -= c;
  }
  return coeff;
}

void enumerate_counts(int k, long long remaining, std::vector<long long>& current,
                      const std::function<void(const std::vector<long long>&)>& visit) {
  if (static_cast<int>(current.size()) == k - 1) {
    current.push_back(remaining);
    visit(current);
    current.pop_back();
    return;
  }
  for (long long c = 0; c <= remaining; ++c) {
    current.push_back(c);
    enumerate_counts(k, remaining - c, current, visit);
    current.pop_back();
  }
}

}  // namespace

double exact_multinomial_rejection_rate(const MixedStrategy& target, int n, double alpha) {
  if (target.size() > 4) throw std::domain_error("enumeration bound exceeded: k <= 4");
  if (n > 20) throw std::domain_error("enumeration bound exceeded: n <= 20");
  if (n < 1) throw std::domain_error("sample size must be at least 1");
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("alpha must be in [0,1]");

  const int k = target.size();
  double rate = 0.0;
  std::vector<long long> current;
  enumerate_counts(k, n, current, [&](const std::vector<long long>& counts) {
    double prob = static_cast<double>(multinomial_coefficient(n, counts));
    for (int j = 0; j < k; ++j) {
      if (counts[static_cast<size_t>(j)] == 0) continue;
      const double pj = target.prob(j);
      if (pj == 0.0) return;  // impossible under the target
      prob *= std::pow(pj, static_cast<double>(counts[static_cast<size_t>(j)]));
    }
    const GofTestResult gof =
        chi_squared_gof(target, CountVector(target.alphabet(), counts));
    if (gof.p_value <= alpha) rate += prob;
  });
  return rate;
}

}  // namespace strattest::oracle
