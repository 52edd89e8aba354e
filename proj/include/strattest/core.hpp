#pragma once

#include <string>
#include <vector>

namespace strattest {

/// Finite action set of a single player. Actions are dense indices
/// 0..k-1 with attached display labels; all statistics in this library
/// are label-agnostic.
class ActionAlphabet {
 public:
  /// Synthesizes labels "a0".."a(k-1)".
  explicit ActionAlphabet(int k);
  explicit ActionAlphabet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int index) const { return labels_[index]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const ActionAlphabet& other) const = default;

 private:
  std::vector<std::string> labels_;
};

/// Ordered observations of pure-strategy play, one index per iteration.
class PlaySequence {
 public:
  PlaySequence(ActionAlphabet alphabet, std::vector<int> items);

  const ActionAlphabet& alphabet() const { return alphabet_; }
  const std::vector<int>& items() const { return items_; }
  long long size() const { return static_cast<long long>(items_.size()); }
  bool empty() const { return items_.empty(); }
  int operator[](long long i) const { return items_[static_cast<size_t>(i)]; }

 private:
  ActionAlphabet alphabet_;
  std::vector<int> items_;
};

/// Probability vector over an action alphabet. Probabilities must lie in
/// [0,1] and sum to 1 within 1e-12.
class MixedStrategy {
 public:
  MixedStrategy(ActionAlphabet alphabet, std::vector<double> probs);

  const ActionAlphabet& alphabet() const { return alphabet_; }
  const std::vector<double>& probs() const { return probs_; }
  double prob(int index) const { return probs_[static_cast<size_t>(index)]; }
  int size() const { return alphabet_.size(); }

  /// Point mass on a single action.
  static MixedStrategy pure(ActionAlphabet alphabet, int index);
  static MixedStrategy uniform(ActionAlphabet alphabet);

 private:
  ActionAlphabet alphabet_;
  std::vector<double> probs_;
};

/// Per-category observation counts with their total.
class CountVector {
 public:
  CountVector(ActionAlphabet alphabet, std::vector<long long> counts);

  const ActionAlphabet& alphabet() const { return alphabet_; }
  const std::vector<long long>& counts() const { return counts_; }
  long long count(int index) const { return counts_[static_cast<size_t>(index)]; }
  long long total() const { return total_; }
  int size() const { return alphabet_.size(); }

 private:
  ActionAlphabet alphabet_;
  std::vector<long long> counts_;
  long long total_;
};

/// Tallies how often each category index occurs in the sequence.
CountVector count_categories(const PlaySequence& seq);

/// Number of runs (maximal blocks of equal categories). Throws on an
/// empty sequence.
long long count_runs(const PlaySequence& seq);

}  // namespace strattest
