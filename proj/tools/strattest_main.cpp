#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "strattest/chisq_gof.hpp"
#include "strattest/core.hpp"
#include "strattest/ingest.hpp"
#include "strattest/oracle.hpp"
#include "strattest/runs_test.hpp"
#include "strattest/simulate.hpp"
#include "strattest/strategy_test.hpp"

namespace {

using namespace strattest;

std::string fmt(double v, int significant = 6) {
  std::ostringstream out;
  out << std::setprecision(significant) << v;
  return out.str();
}

// Accepts decimal ("0.25") and fractional ("1/3") tokens.
double parse_prob_token(const std::string& token) {
  const size_t slash = token.find('/');
  size_t used = 0;
  if (slash == std::string::npos) {
    const double v = std::stod(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad probability token: " + token);
    return v;
  }
  const double num = std::stod(token.substr(0, slash), &used);
  if (used != slash) throw std::invalid_argument("bad probability token: " + token);
  const double den = std::stod(token.substr(slash + 1), &used);
  if (used != token.size() - slash - 1 || den == 0.0)
    throw std::invalid_argument("bad probability token: " + token);
  return num / den;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::vector<double> parse_probs(const std::string& spec) {
  std::vector<double> probs;
  for (const auto& token : split(spec, ',')) probs.push_back(parse_prob_token(token));
  return probs;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("could not open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ActionAlphabet alphabet_for(size_t k, const std::string& labels_spec) {
  if (labels_spec.empty()) return ActionAlphabet(static_cast<int>(k));
  auto labels = split(labels_spec, ',');
  if (labels.size() != k)
    throw std::invalid_argument("label count does not match the number of probabilities");
  return ActionAlphabet(labels);
}

std::string decision_name(Decision d) {
  return d == Decision::RejectH0 ? "RejectH0" : "AcceptH0";
}

std::string rejected_by_name(const RejectedBy& r) {
  if (r.runs && r.chi_squared) return "runs,chi2";
  if (r.runs) return "runs";
  if (r.chi_squared) return "chi2";
  return "none";
}

void print_report(const StrategyTestReport& report, const PlaySequence& seq) {
  const CountVector counts = count_categories(seq);
  std::cout << "n: " << seq.size() << "  k: " << seq.alphabet().size() << "\ncounts:";
  for (int j = 0; j < counts.size(); ++j)
    std::cout << ' ' << seq.alphabet().label(j) << '=' << counts.count(j);
  std::cout << '\n';
  const auto& r = report.runs;
  std::cout << "runs test: r=" << r.r << " q=" << fmt(r.q) << " c=" << fmt(r.c)
            << " mu=" << fmt(r.mu) << " sigma=" << fmt(r.sigma) << " z=" << fmt(r.z)
            << " p=" << fmt(r.p_value) << (r.degenerate ? " (degenerate)" : "") << '\n';
  const auto& g = report.gof;
  std::cout << "chi-squared: T=" << fmt(g.statistic) << " df=" << g.df
            << " p=" << fmt(g.p_value);
  if (g.small_expected) std::cout << " [warning: expected count below 5]";
  if (g.zero_probability_violation)
    std::cout << " [warning: observation in a zero-probability category]";
  if (g.degenerate) std::cout << " (degenerate)";
  std::cout << '\n';
  std::cout << "alpha: " << fmt(report.alpha) << " (each subtest at "
            << fmt(report.alpha / 2) << ")\n";
  std::cout << "decision: " << decision_name(report.decision) << '\n';
  std::cout << "rejected_by: " << rejected_by_name(report.rejected_by) << '\n';
}

struct BatchSummary {
  double alpha = 0.0;
  long long x1 = 0, x2 = 0, x3 = 0, x4 = 0;
  long long total() const { return x1 + x2 + x3 + x4; }
};

int run_test(const std::string& file, const std::string& target_spec, double alpha,
             const std::string& labels_spec) {
  const auto probs = parse_probs(target_spec);
  const ActionAlphabet alphabet = alphabet_for(probs.size(), labels_spec);
  const MixedStrategy target(alphabet, probs);
  const PlaySequence seq = parse_sequence_file(read_file(file), alphabet);
  const StrategyTestReport report = strategy_test(target, seq, alpha);
  print_report(report, seq);
  return report.decision == Decision::RejectH0 ? 1 : 0;
}

int run_batch(const std::string& dir, const std::string& target_spec,
              std::vector<double> alphas, const std::string& out_path,
              std::optional<long long> expected_length) {
  const auto probs = parse_probs(target_spec);
  const ActionAlphabet alphabet(static_cast<int>(probs.size()));
  const MixedStrategy target(alphabet, probs);
  if (alphas.empty()) alphas = {0.05};

  const DatasetLoad load = load_dataset(dir, alphabet, expected_length);
  std::cout << "subjects: " << load.records.size() << "  failures: " << load.failures.size()
            << "  warnings: " << load.warnings.size() << '\n';
  for (const auto& f : load.failures)
    std::cout << "  failed " << f.subject_id << ": " << f.message << '\n';
  for (const auto& w : load.warnings)
    std::cout << "  warning " << w.subject_id << ": " << w.message << '\n';
  if (load.records.empty())
    std::cout << "warning: no subjects loaded; summary is empty\n";

  struct SubjectResult {
    std::string id;
    double p_r, p_chi;
  };
  std::vector<SubjectResult> results;
  results.reserve(load.records.size());
  for (const auto& record : load.records) {
    // alpha only affects classification; run the subtests once.
    const RunsTestResult runs = generalized_runs_test(record.sequence);
    const GofTestResult gof = chi_squared_gof(target, count_categories(record.sequence));
    results.push_back({record.subject_id, runs.p_value, gof.p_value});
  }

  std::ostringstream csv;
  csv << "alpha,subject_id,p_r,p_chi,class\n";
  std::cout << "alpha        X1(both)  X2(chi2)  X3(runs)  X4(neither)  total\n";
  for (double alpha : alphas) {
    BatchSummary summary;
    summary.alpha = alpha;
    for (const auto& s : results) {
      const bool runs_sig = s.p_r <= alpha / 2;
      const bool chi_sig = s.p_chi <= alpha / 2;
      const char* cls = runs_sig ? (chi_sig ? "both" : "runs-only")
                                 : (chi_sig ? "chi2-only" : "neither");
      if (runs_sig && chi_sig) ++summary.x1;
      else if (chi_sig) ++summary.x2;
      else if (runs_sig) ++summary.x3;
      else ++summary.x4;
      csv << fmt(alpha) << ',' << s.id << ',' << fmt(s.p_r) << ',' << fmt(s.p_chi) << ','
          << cls << '\n';
    }
    std::cout << std::left << std::setw(13) << fmt(alpha) << std::setw(10) << summary.x1
              << std::setw(10) << summary.x2 << std::setw(10) << summary.x3 << std::setw(13)
              << summary.x4 << summary.total() << '\n';
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("could not open output file: " + out_path);
    out << csv.str();
    std::cout << "per-subject table written to " << out_path << '\n';
  }
  return 0;
}

int run_calibrate(const std::string& target_spec, long long n, long long trials, double alpha,
                  std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (n < 2) throw std::invalid_argument("sequence length must be at least 2");
  const auto probs = parse_probs(target_spec);
  const ActionAlphabet alphabet(static_cast<int>(probs.size()));
  const MixedStrategy target(alphabet, probs);
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0,1)");

  std::mt19937_64 rng(seed);
  long long rej_runs = 0, rej_chi = 0, rej_combined = 0;
  for (long long t = 0; t < trials; ++t) {
    const PlaySequence seq = sample_iid(target, n, rng);
    const StrategyTestReport report = strategy_test(target, seq, alpha);
    if (report.rejected_by.runs) ++rej_runs;
    if (report.rejected_by.chi_squared) ++rej_chi;
    if (report.decision == Decision::RejectH0) ++rej_combined;
  }
  const auto rate_line = [&](const char* name, long long hits) {
    const double p = static_cast<double>(hits) / static_cast<double>(trials);
    const double half = 1.96 * std::sqrt(p * (1 - p) / static_cast<double>(trials));
    std::cout << "  " << std::left << std::setw(10) << name << fmt(p) << " +- " << fmt(half)
              << " (95% CI)\n";
  };
  std::cout << "trials: " << trials << "  n: " << n << "  alpha: " << fmt(alpha)
            << "  seed: " << seed << "\nrejection rates (each subtest at alpha/2 = "
            << fmt(alpha / 2) << "):\n";
  rate_line("runs", rej_runs);
  rate_line("chi2", rej_chi);
  rate_line("combined", rej_combined);
  return 0;
}

OpponentProcess parse_opponent(const std::string& spec, const ActionAlphabet& alphabet,
                               std::uint64_t seed) {
  const size_t colon = spec.find(':');
  const std::string kind = spec.substr(0, colon == std::string::npos ? spec.size() : colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "static") {
    return {StaticMixedOpponent{MixedStrategy(alphabet, parse_probs(rest))}, seed};
  } else if (kind == "cycle") {
    std::vector<int> actions;
    for (const auto& token : split(rest, ',')) {
      int index = -1;
      for (int j = 0; j < alphabet.size(); ++j)
        if (alphabet.label(j) == token) index = j;
      if (index < 0) {
        try {
          index = std::stoi(token);
        } catch (const std::exception&) {
          throw std::invalid_argument("unknown action \"" + token + "\" in cycle");
        }
      }
      actions.push_back(index);
    }
    return {CycleOpponent{actions}, seed};
  } else if (kind == "markov") {
    const auto lines = split(read_file(rest), '\n');
    std::vector<std::vector<double>> rows;
    for (const auto& line : lines) {
      if (line.empty() || line.front() == '#') continue;
      rows.push_back(parse_probs(line));
    }
    if (rows.size() != static_cast<size_t>(alphabet.size()) + 1)
      throw std::invalid_argument(
          "markov file needs an initial-distribution line plus k transition rows");
    return {MarkovOpponent{{rows.begin() + 1, rows.end()}, rows.front()}, seed};
  }
  throw std::invalid_argument("opponent spec must start with static:, cycle: or markov:");
}

int run_meta(const std::string& game_path, const std::string& opponent_spec,
             const std::string& target_spec, int explore, int horizon, double alpha,
             std::uint64_t seed, std::optional<std::uint64_t> opp_seed,
             const std::string& prior_spec, const std::string& out_path) {
  StrategicFormGame game = game_path.empty() ? StrategicFormGame::rock_paper_scissors()
                                             : parse_game_file(read_file(game_path));
  const ActionAlphabet alphabet =
      game_path.empty() && game.rows() == 3
          ? ActionAlphabet(std::vector<std::string>{"R", "P", "S"})
          : ActionAlphabet(game.rows());

  MetaConfig config{explore, horizon,
                    target_spec.empty()
                        ? MixedStrategy::uniform(alphabet)
                        : MixedStrategy(alphabet, parse_probs(target_spec)),
                    {}, alpha, seed};
  config.prior_pseudocounts.assign(static_cast<size_t>(game.cols()), 0.0);
  if (!prior_spec.empty()) {
    config.prior_pseudocounts = parse_probs(prior_spec);
    if (config.prior_pseudocounts.size() != static_cast<size_t>(game.cols()))
      throw std::invalid_argument("prior pseudocount length does not match the game");
  }

  const OpponentProcess opponent =
      parse_opponent(opponent_spec, alphabet, opp_seed.value_or(seed + 1));
  const MetaTrajectory trajectory = run_meta_algorithm(game, config, opponent);

  std::cout << "game: " << (game_path.empty() ? "builtin rps" : game_path)
            << "  opponent: " << opponent_spec << "\nexplore: " << explore
            << "  horizon: " << horizon << "  alpha: " << fmt(alpha) << "  seed: " << seed
            << '\n';
  const auto& test = trajectory.test;
  std::cout << "test after exploration: p_runs=" << fmt(test.runs.p_value)
            << " p_chi2=" << fmt(test.gof.p_value) << " decision=" << decision_name(test.decision)
            << " rejected_by=" << rejected_by_name(test.rejected_by) << '\n';
  std::cout << "branch: " << (trajectory.exploited ? "exploit" : "equilibrium") << '\n';
  double post = 0.0;
  long long post_steps = 0;
  for (const auto& s : trajectory.steps)
    if (s.step > explore) {
      post += s.payoff;
      ++post_steps;
    }
  std::cout << "total payoff: " << fmt(trajectory.total_payoff) << "  mean per iteration: "
            << fmt(trajectory.total_payoff / static_cast<double>(horizon)) << '\n';
  if (post_steps > 0)
    std::cout << "post-exploration mean payoff: " << fmt(post / static_cast<double>(post_steps))
              << " over " << post_steps << " iterations\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("could not open output file: " + out_path);
    out << format_trajectory(trajectory, alphabet, alphabet);
    std::cout << "trajectory written to " << out_path << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statistical tests for strategy adherence in repeated games"};
  app.require_subcommand(1);

  std::string file, dir, target, labels, out_path, game_path, opponent_spec, prior_spec;
  double alpha = 0.05;
  std::vector<double> alphas;
  long long n = 50, trials = 10000;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> opp_seed;
  std::optional<long long> expected_length;
  int explore = 50, horizon = 200;

  auto* test_cmd = app.add_subcommand("test", "Test one play sequence against a target strategy");
  test_cmd->add_option("file", file, "sequence file (comma/newline separated indices)")
      ->required();
  test_cmd->add_option("--target", target, "target probabilities, e.g. 1/3,1/3,1/3")->required();
  test_cmd->add_option("--alpha", alpha, "significance level")->capture_default_str();
  test_cmd->add_option("--labels", labels, "display labels, e.g. R,P,S");

  auto* batch_cmd = app.add_subcommand("batch", "Classify every subject CSV in a directory");
  batch_cmd->add_option("dir", dir, "dataset directory of per-subject *.csv files")->required();
  batch_cmd->add_option("--target", target, "target probabilities")->required();
  batch_cmd->add_option("--alpha", alphas, "significance level (repeatable)");
  batch_cmd->add_option("--out", out_path, "write per-subject CSV here");
  batch_cmd->add_option("--expect-length", expected_length,
                        "warn when a sequence length differs from this");

  auto* cal_cmd = app.add_subcommand("calibrate", "Monte Carlo rejection rates under the null");
  cal_cmd->add_option("--target", target, "target probabilities")->required();
  cal_cmd->add_option("--n", n, "sequence length per trial")->capture_default_str();
  cal_cmd->add_option("--trials", trials, "number of simulated sequences")->capture_default_str();
  cal_cmd->add_option("--alpha", alpha, "significance level")->capture_default_str();
  cal_cmd->add_option("--seed", seed, "random seed")->capture_default_str();

  auto* meta_cmd = app.add_subcommand("meta", "Run the explore/test/exploit meta-algorithm");
  meta_cmd->add_option("--game", game_path, "game file (default: builtin rock-paper-scissors)");
  meta_cmd->add_option("--opponent", opponent_spec,
                       "opponent spec: static:p1,p2,... | cycle:a,b,c | markov:file")
      ->required();
  meta_cmd->add_option("--target", target,
                       "equilibrium strategy (default: uniform); also the test target");
  meta_cmd->add_option("--explore", explore, "exploration steps")->capture_default_str();
  meta_cmd->add_option("--horizon", horizon, "total iterations")->capture_default_str();
  meta_cmd->add_option("--alpha", alpha, "significance level")->capture_default_str();
  meta_cmd->add_option("--seed", seed, "random seed for our own play")->capture_default_str();
  meta_cmd->add_option("--opponent-seed", opp_seed, "opponent seed (default: seed+1)");
  meta_cmd->add_option("--prior", prior_spec, "pseudocounts for the frequency model");
  meta_cmd->add_option("--out", out_path, "write the full trajectory here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (test_cmd->parsed()) return run_test(file, target, alpha, labels);
    if (batch_cmd->parsed()) return run_batch(dir, target, alphas, out_path, expected_length);
    if (cal_cmd->parsed()) return run_calibrate(target, n, trials, alpha, seed);
    if (meta_cmd->parsed())
      return run_meta(game_path, opponent_spec, target, explore, horizon, alpha, seed, opp_seed,
                      prior_spec, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
