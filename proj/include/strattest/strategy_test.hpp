#pragma once

#include "strattest/chisq_gof.hpp"
#include "strattest/core.hpp"
#include "strattest/runs_test.hpp"

namespace strattest {

/// AcceptH0 carries the usual "fail to reject" meaning.
enum class Decision { RejectH0, AcceptH0 };

struct RejectedBy {
  bool runs = false;
  bool chi_squared = false;
};

struct StrategyTestReport {
  RunsTestResult runs;
  GofTestResult gof;
  double alpha = 0.0;
  Decision decision = Decision::AcceptH0;
  RejectedBy rejected_by;
};

/// Combined test of the null hypothesis that the sequence was produced by
/// independent draws from the target strategy. Runs both component tests
/// at level alpha/2 and rejects if either p-value is <= alpha/2
/// (Bonferroni split; the comparison is inclusive).
StrategyTestReport strategy_test(const MixedStrategy& target, const PlaySequence& seq,
                                 double alpha);

}  // namespace strattest
