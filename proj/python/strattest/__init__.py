"""Statistical tests for strategy adherence in repeated games."""

from ._core import (
    Decision,
    GofTestResult,
    RejectedBy,
    RunsTestResult,
    StrategyTestReport,
    chi_squared_gof,
    chi_squared_sf,
    count_categories,
    count_runs,
    exact_multinomial_rejection_rate,
    exact_run_distribution,
    generalized_runs_test,
    std_normal_cdf,
    strategy_test,
)

__all__ = [
    "Decision",
    "GofTestResult",
    "RejectedBy",
    "RunsTestResult",
    "StrategyTestReport",
    "chi_squared_gof",
    "chi_squared_sf",
    "count_categories",
    "count_runs",
    "exact_multinomial_rejection_rate",
    "exact_run_distribution",
    "generalized_runs_test",
    "std_normal_cdf",
    "strategy_test",
]
