#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "strattest/core.hpp"
#include "strattest/strategy_test.hpp"

namespace strattest {

/// Two-player strategic-form game: a rows x cols table of (u1, u2)
/// payoff pairs, player 1 choosing the row.
class StrategicFormGame {
 public:
  StrategicFormGame(int rows, int cols, std::vector<std::array<double, 2>> payoffs);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  double payoff(int row, int col, int player) const {
    return payoffs_[static_cast<size_t>(row * cols_ + col)][static_cast<size_t>(player - 1)];
  }
  bool zero_sum(double tol = 0.0) const;

  static StrategicFormGame rock_paper_scissors();

 private:
  int rows_;
  int cols_;
  std::vector<std::array<double, 2>> payoffs_;  // row-major
};

/// Plain-text game format: first line "k1 k2", then k1 rows of k2
/// whitespace-separated "u1,u2" cells.
StrategicFormGame parse_game_file(const std::string& content);
std::string format_game(const StrategicFormGame& game);

// Opponent processes are oblivious: they never condition on our play.
struct StaticMixedOpponent {
  MixedStrategy strategy;
};
struct CycleOpponent {
  std::vector<int> actions;  // visited in order, wrapping around
};
struct MarkovOpponent {
  std::vector<std::vector<double>> transition;  // row-stochastic, k x k
  std::vector<double> initial;                  // distribution over first action
};

struct OpponentProcess {
  std::variant<StaticMixedOpponent, CycleOpponent, MarkovOpponent> kind;
  std::uint64_t seed = 0;
};

struct MetaConfig {
  int explore_steps = 0;      // equilibrium play while observing
  int horizon = 0;            // total iterations
  MixedStrategy equilibrium;  // our strategy during exploration and the test target
  std::vector<double> prior_pseudocounts;
  double alpha = 0.05;
  std::uint64_t seed = 0;
};

struct StepRecord {
  int step = 0;  // 1-based
  int own_action = 0;
  int opp_action = 0;
  double payoff = 0.0;      // player 1 payoff this iteration
  double cumulative = 0.0;  // running total
};

struct MetaTrajectory {
  std::vector<StepRecord> steps;
  StrategyTestReport test;  // evaluated once, after exploration
  bool exploited = false;
  double total_payoff = 0.0;
};

/// Bilinear expected utility for the given player, own strategy first.
double expected_payoff(const StrategicFormGame& game, const MixedStrategy& own,
                       const MixedStrategy& opp, int player);

/// Pure best response for the given player against the opponent model.
/// Ties break toward the lowest action index.
MixedStrategy best_response(const StrategicFormGame& game, const MixedStrategy& opp_model,
                            int player);
int best_response_index(const StrategicFormGame& game, const MixedStrategy& opp_model,
                        int player);

/// Frequency-count opponent model with additive pseudocounts:
/// prob(j) = (pseudo_j + count_j) / (sum pseudo + n).
MixedStrategy frequency_model(const std::vector<double>& prior_pseudocounts,
                              const PlaySequence& observations);
MixedStrategy frequency_model(const std::vector<double>& prior_pseudocounts,
                              const CountVector& counts);

/// Plays the exploration/test/exploit schedule as player 1 against an
/// oblivious opponent process. The strategy test is evaluated exactly
/// once, on the exploration observations; on acceptance the equilibrium
/// is played for all remaining iterations, otherwise a refitted best
/// response is.
MetaTrajectory run_meta_algorithm(const StrategicFormGame& game, const MetaConfig& config,
                                  const OpponentProcess& opponent);

/// Per-iteration records plus a summary block.
std::string format_trajectory(const MetaTrajectory& trajectory, const ActionAlphabet& own,
                              const ActionAlphabet& opp);

// Deterministic sampling helpers shared by the simulator and the
// calibration command. Uniform deviates come straight from the engine's
// bits so trajectories are identical across platforms.
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
int sample_index(const std::vector<double>& probs, std::mt19937_64& rng);
PlaySequence sample_iid(const MixedStrategy& strategy, long long n, std::mt19937_64& rng);

}  // namespace strattest
