#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "zipfcode/errors.hpp"

namespace zipfcode {

// Ranked word-type probabilities: positive, non-increasing, summing to 1.
// Inputs whose sum is within 1e-9 of 1 are renormalized; anything further
// off is rejected.
class ProbabilityDistribution {
public:
  static constexpr double kSumTolerance = 1e-9;

  explicit ProbabilityDistribution(std::vector<double> probs)
      : probs_(std::move(probs)) {
    if (probs_.empty())
      throw invalid_distribution("distribution must be non-empty");
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      if (!(probs_[i] > 0.0))
        throw invalid_distribution("probabilities must be positive");
      if (i > 0 && probs_[i] > probs_[i - 1])
        throw invalid_distribution("probabilities must be non-increasing");
    }
    double sum = std::accumulate(probs_.begin(), probs_.end(), 0.0);
    if (std::abs(sum - 1.0) > kSumTolerance)
      throw invalid_distribution("probabilities must sum to 1");
    if (sum != 1.0)
      for (double &p : probs_)
        p /= sum;
  }

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double> &probs() const noexcept { return probs_; }

  // Entropy in base n, in letters per word.
  double entropy(int n) const {
    double h = 0.0;
    for (double p : probs_)
      h -= p * std::log(p);
    return h / std::log(static_cast<double>(n));
  }

private:
  std::vector<double> probs_;
};

// Builds a distribution from raw counts (e.g. a word,count CSV),
// sorted descending.
inline ProbabilityDistribution
distribution_from_counts(std::vector<double> counts) {
  if (counts.empty())
    throw invalid_distribution("no counts");
  std::sort(counts.begin(), counts.end(), std::greater<>());
  double total = std::accumulate(counts.begin(), counts.end(), 0.0);
  if (!(total > 0.0))
    throw invalid_distribution("counts must be positive");
  std::vector<double> probs(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    probs[i] = counts[i] / total;
  return ProbabilityDistribution(std::move(probs));
}

} // namespace zipfcode
