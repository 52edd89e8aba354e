#include "strattest/simulate.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace strattest {

StrategicFormGame::StrategicFormGame(int rows, int cols,
                                     std::vector<std::array<double, 2>> payoffs)
    : rows_(rows), cols_(cols), payoffs_(std::move(payoffs)) {
  if (rows_ < 1 || cols_ < 1)
    throw std::invalid_argument("game dimensions must be positive");
  if (payoffs_.size() != static_cast<size_t>(rows_) * static_cast<size_t>(cols_))
    throw std::invalid_argument("payoff table size does not match dimensions");
}

bool StrategicFormGame::zero_sum(double tol) const {
  for (const auto& cell : payoffs_)
    if (std::abs(cell[0] + cell[1]) > tol) return false;
  return true;
}

StrategicFormGame StrategicFormGame::rock_paper_scissors() {
  return StrategicFormGame(3, 3,
                           {{0, 0}, {-1, 1}, {1, -1},    // rock row
                            {1, -1}, {0, 0}, {-1, 1},    // paper row
                            {-1, 1}, {1, -1}, {0, 0}});  // scissors row
}

StrategicFormGame parse_game_file(const std::string& content) {
  std::istringstream in(content);
  int rows = 0, cols = 0;
  if (!(in >> rows >> cols))
    throw std::invalid_argument("game file must start with \"k1 k2\"");
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("game dimensions must be positive");
  std::vector<std::array<double, 2>> payoffs;
  payoffs.reserve(static_cast<size_t>(rows) * static_cast<size_t>(cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      std::string cell;
      if (!(in >> cell))
        throw std::invalid_argument("game file ended before all payoff cells were read");
      const size_t comma = cell.find(',');
      if (comma == std::string::npos)
        throw std::invalid_argument("payoff cell \"" + cell + "\" is not of the form u1,u2");
      try {
        size_t used = 0;
        const double u1 = std::stod(cell.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument(cell);
        const double u2 = std::stod(cell.substr(comma + 1), &used);
        if (used != cell.size() - comma - 1) throw std::invalid_argument(cell);
        payoffs.push_back({u1, u2});
      } catch (const std::exception&) {
        throw std::invalid_argument("payoff cell \"" + cell + "\" is not of the form u1,u2");
      }
    }
  }
  return StrategicFormGame(rows, cols, std::move(payoffs));
}

std::string format_game(const StrategicFormGame& game) {
  std::ostringstream out;
  out << game.rows() << ' ' << game.cols() << '\n';
  for (int r = 0; r < game.rows(); ++r) {
    for (int c = 0; c < game.cols(); ++c) {
      if (c > 0) out << ' ';
      out << game.payoff(r, c, 1) << ',' << game.payoff(r, c, 2);
    }
    out << '\n';
  }
  return out.str();
}

double expected_payoff(const StrategicFormGame& game, const MixedStrategy& own,
                       const MixedStrategy& opp, int player) {
  if (player != 1 && player != 2) throw std::invalid_argument("player must be 1 or 2");
  const int own_dim = player == 1 ? game.rows() : game.cols();
  const int opp_dim = player == 1 ? game.cols() : game.rows();
  if (own.size() != own_dim || opp.size() != opp_dim)
    throw std::invalid_argument("strategy dimensions do not match the game");
  double value = 0.0;
  for (int a = 0; a < own_dim; ++a) {
    if (own.prob(a) == 0.0) continue;
    for (int b = 0; b < opp_dim; ++b) {
      const double u = player == 1 ? game.payoff(a, b, 1) : game.payoff(b, a, 2);
      value += own.prob(a) * opp.prob(b) * u;
    }
  }
  return value;
}

int best_response_index(const StrategicFormGame& game, const MixedStrategy& opp_model,
                        int player) {
  if (player != 1 && player != 2) throw std::invalid_argument("player must be 1 or 2");
  const int own_dim = player == 1 ? game.rows() : game.cols();
  const int opp_dim = player == 1 ? game.cols() : game.rows();
  if (opp_model.size() != opp_dim)
    throw std::invalid_argument("strategy dimensions do not match the game");
  int best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < own_dim; ++a) {
    double value = 0.0;
    for (int b = 0; b < opp_dim; ++b) {
      const double u = player == 1 ? game.payoff(a, b, 1) : game.payoff(b, a, 2);
      value += opp_model.prob(b) * u;
    }
    if (value > best_value) {
      best_value = value;
      best = a;
    }
  }
  return best;
}

MixedStrategy best_response(const StrategicFormGame& game, const MixedStrategy& opp_model,
                            int player) {
  const int own_dim = player == 1 ? game.rows() : game.cols();
  return MixedStrategy::pure(ActionAlphabet(own_dim),
                             best_response_index(game, opp_model, player));
}

MixedStrategy frequency_model(const std::vector<double>& prior_pseudocounts,
                              const CountVector& counts) {
  if (static_cast<int>(prior_pseudocounts.size()) != counts.size())
    throw std::invalid_argument("pseudocount vector length does not match alphabet size");
  double denom = static_cast<double>(counts.total());
  for (double p : prior_pseudocounts) {
    if (!(p >= 0.0)) throw std::invalid_argument("pseudocounts must be non-negative");
    denom += p;
  }
  if (denom == 0.0)
    throw std::invalid_argument("frequency model undefined: no observations and no pseudocounts");
  std::vector<double> probs(prior_pseudocounts.size());
  for (size_t j = 0; j < probs.size(); ++j)
    probs[j] = (prior_pseudocounts[j] + static_cast<double>(counts.count(static_cast<int>(j)))) / denom;
  return MixedStrategy(counts.alphabet(), std::move(probs));
}

MixedStrategy frequency_model(const std::vector<double>& prior_pseudocounts,
                              const PlaySequence& observations) {
  return frequency_model(prior_pseudocounts, count_categories(observations));
}

int sample_index(const std::vector<double>& probs, std::mt19937_64& rng) {
  double u = uniform_unit(rng);
  for (size_t j = 0; j + 1 < probs.size(); ++j) {
    u -= probs[j];
    if (u < 0.0) return static_cast<int>(j);
  }
  return static_cast<int>(probs.size()) - 1;
}

PlaySequence sample_iid(const MixedStrategy& strategy, long long n, std::mt19937_64& rng) {
  if (n < 0) throw std::invalid_argument("sample size must be non-negative");
  std::vector<int> items;
  items.reserve(static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i) items.push_back(sample_index(strategy.probs(), rng));
  return PlaySequence(strategy.alphabet(), std::move(items));
}

namespace {

void validate_distribution(const std::vector<double>& probs, const char* what) {
  double sum = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument(std::string(what) + " entries must lie in [0,1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument(std::string(what) + " must sum to 1");
}

// Stateful view of an oblivious opponent process.
class OpponentState {
 public:
  OpponentState(const OpponentProcess& process, int k)
      : process_(process), rng_(process.seed) {
    if (const auto* cycle = std::get_if<CycleOpponent>(&process_.kind)) {
      if (cycle->actions.empty()) throw std::invalid_argument("cycle must be non-empty");
      for (int a : cycle->actions)
        if (a < 0 || a >= k)
          throw std::invalid_argument("cycle action out of range");
    } else if (const auto* markov = std::get_if<MarkovOpponent>(&process_.kind)) {
      if (static_cast<int>(markov->transition.size()) != k)
        throw std::invalid_argument("transition matrix must be k x k");
      for (const auto& row : markov->transition) {
        if (static_cast<int>(row.size()) != k)
          throw std::invalid_argument("transition matrix must be k x k");
        validate_distribution(row, "transition rows");
      }
      if (static_cast<int>(markov->initial.size()) != k)
        throw std::invalid_argument("initial distribution must have k entries");
      validate_distribution(markov->initial, "initial distribution");
    } else {
      const auto& strat = std::get<StaticMixedOpponent>(process_.kind).strategy;
      if (strat.size() != k)
        throw std::invalid_argument("opponent strategy dimension does not match the game");
    }
  }

  int next() {
    if (const auto* stat = std::get_if<StaticMixedOpponent>(&process_.kind))
      return sample_index(stat->strategy.probs(), rng_);
    if (const auto* cycle = std::get_if<CycleOpponent>(&process_.kind)) {
      const int a = cycle->actions[position_ % cycle->actions.size()];
      ++position_;
      return a;
    }
    const auto& markov = std::get<MarkovOpponent>(process_.kind);
    state_ = state_ < 0 ? sample_index(markov.initial, rng_)
                        : sample_index(markov.transition[static_cast<size_t>(state_)], rng_);
    return state_;
  }

 private:
  const OpponentProcess& process_;
  std::mt19937_64 rng_;
  size_t position_ = 0;  // cycle
  int state_ = -1;       // markov
};

}  // namespace

MetaTrajectory run_meta_algorithm(const StrategicFormGame& game, const MetaConfig& config,
                                  const OpponentProcess& opponent) {
  if (config.explore_steps < 2)
    throw std::invalid_argument("exploration must last at least 2 steps");
  if (config.explore_steps > config.horizon)
    throw std::invalid_argument("exploration cannot exceed the horizon");
  if (config.equilibrium.size() != game.rows())
    throw std::invalid_argument("equilibrium dimension does not match the game");
  if (game.cols() != config.equilibrium.size())
    throw std::invalid_argument(
        "meta-algorithm requires matching player dimensions (the equilibrium doubles as the "
        "test target for opponent play)");

  const int k = game.cols();
  std::mt19937_64 own_rng(config.seed);
  OpponentState opp_state(opponent, k);

  MetaTrajectory trajectory;
  trajectory.steps.reserve(static_cast<size_t>(config.horizon));
  std::vector<int> observations;
  observations.reserve(static_cast<size_t>(config.horizon));

  auto play_step = [&](int step, int own_action) {
    const int opp_action = opp_state.next();
    observations.push_back(opp_action);
    const double payoff = game.payoff(own_action, opp_action, 1);
    trajectory.total_payoff += payoff;
    trajectory.steps.push_back({step, own_action, opp_action, payoff, trajectory.total_payoff});
  };

  for (int step = 1; step <= config.explore_steps; ++step)
    play_step(step, sample_index(config.equilibrium.probs(), own_rng));

  const PlaySequence explored(config.equilibrium.alphabet(), observations);
  trajectory.test = strategy_test(config.equilibrium, explored, config.alpha);
  trajectory.exploited = trajectory.test.decision == Decision::RejectH0;

  if (!trajectory.exploited) {
    for (int step = config.explore_steps + 1; step <= config.horizon; ++step)
      play_step(step, sample_index(config.equilibrium.probs(), own_rng));
    return trajectory;
  }

  // Exploit: model, respond, observe, refit. Counts are maintained
  // incrementally; the model over them is identical to refitting on the
  // full observation sequence.
  std::vector<long long> counts(static_cast<size_t>(k), 0);
  for (int obs : observations) ++counts[static_cast<size_t>(obs)];
  auto refit = [&]() {
    const MixedStrategy model = frequency_model(
        config.prior_pseudocounts, CountVector(config.equilibrium.alphabet(), counts));
    return best_response_index(game, model, 1);
  };
  int response = refit();
  for (int step = config.explore_steps + 1; step <= config.horizon; ++step) {
    play_step(step, response);
    ++counts[static_cast<size_t>(observations.back())];
    response = refit();
  }
  return trajectory;
}

std::string format_trajectory(const MetaTrajectory& trajectory, const ActionAlphabet& own,
                              const ActionAlphabet& opp) {
  std::ostringstream out;
  out << "step,own,opp,payoff,cumulative\n";
  for (const auto& s : trajectory.steps)
    out << s.step << ',' << own.label(s.own_action) << ',' << opp.label(s.opp_action) << ','
        << s.payoff << ',' << s.cumulative << '\n';
  out << "# summary\n";
  out << "# iterations: " << trajectory.steps.size() << '\n';
  out << "# branch: " << (trajectory.exploited ? "exploit" : "equilibrium") << '\n';
  out << "# p_runs: " << trajectory.test.runs.p_value
      << "  p_chi2: " << trajectory.test.gof.p_value << '\n';
  out << "# total_payoff: " << trajectory.total_payoff << '\n';
  return out.str();
}

}  // namespace strattest
