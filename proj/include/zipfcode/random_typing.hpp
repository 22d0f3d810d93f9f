#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "zipfcode/alphabet.hpp"
#include "zipfcode/errors.hpp"
#include "zipfcode/rng.hpp"

namespace zipfcode {

// Parameters of the generalized random-typing (monkey) model: alphabet
// size, space-bar probability and minimum word length.
struct RandomTypingParams {
  int alphabet_size;
  double space_probability;
  int min_word_length;

  RandomTypingParams(int n, double ps, int l0)
      : alphabet_size(n), space_probability(ps), min_word_length(l0) {
    if (n < 2)
      throw invalid_parameter("alphabet size must be >= 2");
    if (!(ps > 0.0 && ps < 1.0))
      throw invalid_parameter("space probability must be in (0, 1)");
    if (l0 < 0)
      throw invalid_parameter("minimum word length must be >= 0");
  }
};

// Probability of one specific word of length l, conditioned on the word
// having length >= l_0:
//   p(w) = p_s * ((1 - p_s) / N)^l / (1 - p_s)^{l_0}.
inline double word_type_probability(int length, const RandomTypingParams &params) {
  if (length < params.min_word_length)
    throw invalid_parameter("word length below the model minimum");
  double n = static_cast<double>(params.alphabet_size);
  double ps = params.space_probability;
  return ps * std::pow((1.0 - ps) / n, length) /
         std::pow(1.0 - ps, params.min_word_length);
}

// Coefficients of the model's length-probability law l = a log_N p + b:
//   a = 1 / log_N((1 - p_s) / N),  b = a log_N((1 - p_s)^{l_0} / p_s).
// a is always negative.
inline std::pair<double, double> ab_coefficients(const RandomTypingParams &params) {
  double n = static_cast<double>(params.alphabet_size);
  double ps = params.space_probability;
  double log_n = std::log(n);
  double a = log_n / std::log((1.0 - ps) / n);
  double b = a * (params.min_word_length * std::log(1.0 - ps) - std::log(ps)) /
             log_n;
  return {a, b};
}

struct TypeEntry {
  std::uint64_t rank;
  std::string word;
  double probability;
  int length;
};

// Word types ranked by probability; lengths are non-decreasing with rank
// and bounded below by l_0.
struct RankedTypeTable {
  std::vector<TypeEntry> entries;
};

// The top_k most probable word types. Probability depends only on
// length and decreases strictly with it, so probability order is length
// order; ties within a length are broken lexicographically.
inline RankedTypeTable enumerate_types(const RandomTypingParams &params,
                                       std::uint64_t top_k,
                                       std::uint64_t max_types = 10'000'000) {
  if (top_k < 1)
    throw invalid_parameter("top_k must be >= 1");
  if (top_k > max_types)
    throw resource_limit_error("requested type count exceeds the cap of " +
                               std::to_string(max_types));
  Alphabet alphabet(params.alphabet_size);
  int n = params.alphabet_size;

  RankedTypeTable table;
  table.entries.reserve(top_k);
  std::uint64_t rank = 1;
  for (int length = params.min_word_length; rank <= top_k; ++length) {
    double prob = word_type_probability(length, params);
    std::string word(static_cast<std::size_t>(length), alphabet.symbol(0));
    std::vector<int> digits(static_cast<std::size_t>(length), 0);
    std::uint64_t block = 1;
    for (int i = 0; i < length; ++i)
      block *= static_cast<std::uint64_t>(n);
    for (std::uint64_t j = 0; j < block && rank <= top_k; ++j, ++rank) {
      table.entries.push_back({rank, word, prob, length});
      // next word in lexicographic order
      for (int pos = length - 1; pos >= 0; --pos) {
        if (++digits[static_cast<std::size_t>(pos)] < n) {
          word[static_cast<std::size_t>(pos)] =
              alphabet.symbol(digits[static_cast<std::size_t>(pos)]);
          break;
        }
        digits[static_cast<std::size_t>(pos)] = 0;
        word[static_cast<std::size_t>(pos)] = alphabet.symbol(0);
      }
    }
  }
  return table;
}

// Draws n_tokens words by keystroke simulation: each keystroke is a
// space with probability p_s, otherwise a uniform letter; words shorter
// than l_0 are rejected and redrawn. Deterministic for a fixed seed.
inline std::vector<std::string> sample_tokens(const RandomTypingParams &params,
                                              std::uint64_t n_tokens,
                                              std::uint64_t seed) {
  if (n_tokens < 1)
    throw invalid_parameter("token count must be >= 1");
  Alphabet alphabet(params.alphabet_size);
  int n = params.alphabet_size;
  double ps = params.space_probability;
  std::mt19937_64 engine(seed);

  std::vector<std::string> tokens;
  tokens.reserve(n_tokens);
  std::string word;
  while (tokens.size() < n_tokens) {
    word.clear();
    for (;;) {
      double u = detail::uniform01(engine);
      if (u < ps)
        break;
      // conditional on not-space, (u - ps)/(1 - ps) is uniform again
      int letter = static_cast<int>((u - ps) / (1.0 - ps) * n);
      if (letter >= n)
        letter = n - 1;
      word.push_back(alphabet.symbol(letter));
    }
    if (static_cast<int>(word.size()) >= params.min_word_length)
      tokens.push_back(word);
  }
  return tokens;
}

// Mean word length of the model, E[l] = sum_{l >= l_0} l N^l p(w_l),
// truncated when the geometric tail drops below 1e-12.
inline double analytic_mean_length(const RandomTypingParams &params) {
  double ratio = 1.0 - params.space_probability;
  double mean = 0.0, mass = 1.0;
  for (int l = params.min_word_length; mass >= 1e-12; ++l) {
    double term = std::pow(static_cast<double>(params.alphabet_size), l) *
                  word_type_probability(l, params);
    mean += l * term;
    mass *= ratio;
  }
  return mean;
}

} // namespace zipfcode
