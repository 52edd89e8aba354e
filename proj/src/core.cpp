#include "strattest/core.hpp"

#include <stdexcept>
#include <unordered_set>

namespace strattest {

ActionAlphabet::ActionAlphabet(int k) {
  if (k < 1) throw std::invalid_argument("alphabet size must be at least 1");
  labels_.reserve(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) labels_.push_back("a" + std::to_string(i));
}

ActionAlphabet::ActionAlphabet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("alphabet size must be at least 1");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second)
      throw std::invalid_argument("alphabet labels must be distinct: \"" + l + "\"");
  }
}

PlaySequence::PlaySequence(ActionAlphabet alphabet, std::vector<int> items)
    : alphabet_(std::move(alphabet)), items_(std::move(items)) {
  const int k = alphabet_.size();
  for (size_t i = 0; i < items_.size(); ++i) {
    if (items_[i] < 0 || items_[i] >= k)
      throw std::invalid_argument("sequence item " + std::to_string(items_[i]) +
                                  " at position " + std::to_string(i + 1) +
                                  " is not a valid category index");
  }
}

MixedStrategy::MixedStrategy(ActionAlphabet alphabet, std::vector<double> probs)
    : alphabet_(std::move(alphabet)), probs_(std::move(probs)) {
  if (static_cast<int>(probs_.size()) != alphabet_.size())
    throw std::invalid_argument("probability vector length does not match alphabet size");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("probabilities must lie in [0,1]");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("probabilities must sum to 1");
}

MixedStrategy MixedStrategy::pure(ActionAlphabet alphabet, int index) {
  std::vector<double> p(static_cast<size_t>(alphabet.size()), 0.0);
  if (index < 0 || index >= alphabet.size())
    throw std::invalid_argument("pure strategy index out of range");
  p[static_cast<size_t>(index)] = 1.0;
  return MixedStrategy(std::move(alphabet), std::move(p));
}

MixedStrategy MixedStrategy::uniform(ActionAlphabet alphabet) {
  const int k = alphabet.size();
  std::vector<double> p(static_cast<size_t>(k), 1.0 / k);
  return MixedStrategy(std::move(alphabet), std::move(p));
}

CountVector::CountVector(ActionAlphabet alphabet, std::vector<long long> counts)
    : alphabet_(std::move(alphabet)), counts_(std::move(counts)), total_(0) {
  if (static_cast<int>(counts_.size()) != alphabet_.size())
    throw std::invalid_argument("count vector length does not match alphabet size");
  for (long long c : counts_) {
    if (c < 0) throw std::invalid_argument("counts must be non-negative");
    total_ += c;
  }
}

CountVector count_categories(const PlaySequence& seq) {
  std::vector<long long> counts(static_cast<size_t>(seq.alphabet().size()), 0);
  for (int item : seq.items()) ++counts[static_cast<size_t>(item)];
  return CountVector(seq.alphabet(), std::move(counts));
}

long long count_runs(const PlaySequence& seq) {
  if (seq.empty()) throw std::domain_error("empty sequence has no runs");
  long long runs = 1;
  const auto& items = seq.items();
  for (size_t i = 1; i < items.size(); ++i) {
    if (items[i] != items[i - 1]) ++runs;
  }
  return runs;
}

}  // namespace strattest
