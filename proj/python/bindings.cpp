#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "strattest/chisq_gof.hpp"
#include "strattest/core.hpp"
#include "strattest/oracle.hpp"
#include "strattest/runs_test.hpp"
#include "strattest/special_fn.hpp"
#include "strattest/strategy_test.hpp"

namespace py = pybind11;
using namespace strattest;

namespace {

int infer_k(const std::vector<int>& items, std::optional<int> k) {
  if (k) return *k;
  int max_item = -1;
  for (int item : items) max_item = std::max(max_item, item);
  return max_item + 1 < 1 ? 1 : max_item + 1;
}

PlaySequence make_sequence(const std::vector<int>& items, std::optional<int> k) {
  return PlaySequence(ActionAlphabet(infer_k(items, k)), items);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Statistical tests for strategy adherence in repeated games";

  m.def("std_normal_cdf", &std_normal_cdf, py::arg("z"),
        "Standard normal CDF.");
  m.def(
      "chi_squared_sf",
      [](double t, int df) { return chi_squared_sf(t, df); },
      py::arg("t"), py::arg("df"),
      "Chi-squared survival function P(X >= t) with df degrees of freedom.");

  m.def(
      "count_runs",
      [](const std::vector<int>& items, std::optional<int> k) {
        return count_runs(make_sequence(items, k));
      },
      py::arg("sequence"), py::arg("k") = py::none(),
      "Number of runs in a sequence of category indices.");
  m.def(
      "count_categories",
      [](const std::vector<int>& items, std::optional<int> k) {
        return count_categories(make_sequence(items, k)).counts();
      },
      py::arg("sequence"), py::arg("k") = py::none(),
      "Per-category counts of a sequence of category indices.");

  py::class_<RunsTestResult>(m, "RunsTestResult")
      .def_readonly("r", &RunsTestResult::r)
      .def_readonly("q", &RunsTestResult::q)
      .def_readonly("c", &RunsTestResult::c)
      .def_readonly("mu", &RunsTestResult::mu)
      .def_readonly("sigma", &RunsTestResult::sigma)
      .def_readonly("z", &RunsTestResult::z)
      .def_readonly("p_value", &RunsTestResult::p_value)
      .def_readonly("degenerate", &RunsTestResult::degenerate)
      .def("__repr__", [](const RunsTestResult& r) {
        return "RunsTestResult(r=" + std::to_string(r.r) +
               ", p_value=" + std::to_string(r.p_value) + ")";
      });

  py::class_<GofTestResult>(m, "GofTestResult")
      .def_readonly("statistic", &GofTestResult::statistic)
      .def_readonly("df", &GofTestResult::df)
      .def_readonly("p_value", &GofTestResult::p_value)
      .def_readonly("expected", &GofTestResult::expected)
      .def_readonly("small_expected", &GofTestResult::small_expected)
      .def_readonly("zero_probability_violation", &GofTestResult::zero_probability_violation)
      .def_readonly("degenerate", &GofTestResult::degenerate)
      .def("__repr__", [](const GofTestResult& g) {
        return "GofTestResult(statistic=" + std::to_string(g.statistic) +
               ", p_value=" + std::to_string(g.p_value) + ")";
      });

  py::enum_<Decision>(m, "Decision")
      .value("RejectH0", Decision::RejectH0)
      .value("AcceptH0", Decision::AcceptH0);

  py::class_<RejectedBy>(m, "RejectedBy")
      .def_readonly("runs", &RejectedBy::runs)
      .def_readonly("chi_squared", &RejectedBy::chi_squared);

  py::class_<StrategyTestReport>(m, "StrategyTestReport")
      .def_readonly("runs", &StrategyTestReport::runs)
      .def_readonly("gof", &StrategyTestReport::gof)
      .def_readonly("alpha", &StrategyTestReport::alpha)
      .def_readonly("decision", &StrategyTestReport::decision)
      .def_readonly("rejected_by", &StrategyTestReport::rejected_by)
      .def("__repr__", [](const StrategyTestReport& r) {
        return std::string("StrategyTestReport(decision=") +
               (r.decision == Decision::RejectH0 ? "RejectH0" : "AcceptH0") +
               ", p_runs=" + std::to_string(r.runs.p_value) +
               ", p_chi2=" + std::to_string(r.gof.p_value) + ")";
      });

  m.def(
      "generalized_runs_test",
      [](const std::vector<int>& items, std::optional<int> k) {
        return generalized_runs_test(make_sequence(items, k));
      },
      py::arg("sequence"), py::arg("k") = py::none(),
      "Multi-category runs test of independence.");

  m.def(
      "chi_squared_gof",
      [](const std::vector<double>& target, const std::vector<long long>& counts) {
        const ActionAlphabet alphabet(static_cast<int>(target.size()));
        return chi_squared_gof(MixedStrategy(alphabet, target),
                               CountVector(alphabet, counts));
      },
      py::arg("target"), py::arg("counts"),
      "Chi-squared goodness of fit of counts against target probabilities.");

  m.def(
      "strategy_test",
      [](const std::vector<double>& target, const std::vector<int>& items, double alpha) {
        const ActionAlphabet alphabet(static_cast<int>(target.size()));
        return strategy_test(MixedStrategy(alphabet, target),
                             PlaySequence(alphabet, items), alpha);
      },
      py::arg("target"), py::arg("sequence"), py::arg("alpha") = 0.05,
      "Combined runs + goodness-of-fit test with a Bonferroni split.");

  m.def(
      "exact_run_distribution",
      [](const std::vector<long long>& counts) {
        const ActionAlphabet alphabet(static_cast<int>(counts.size()));
        return oracle::exact_run_distribution(CountVector(alphabet, counts)).pmf;
      },
      py::arg("counts"),
      "Exact run-count distribution over arrangements of a small multiset.");

  m.def(
      "exact_multinomial_rejection_rate",
      [](const std::vector<double>& target, int n, double alpha) {
        const ActionAlphabet alphabet(static_cast<int>(target.size()));
        return oracle::exact_multinomial_rejection_rate(MixedStrategy(alphabet, target), n,
                                                        alpha);
      },
      py::arg("target"), py::arg("n"), py::arg("alpha"),
      "Exact Type-I error of the goodness-of-fit component by enumeration.");
}
