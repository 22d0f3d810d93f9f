#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "zipfcode/alphabet.hpp"
#include "zipfcode/distribution.hpp"
#include "zipfcode/errors.hpp"

namespace zipfcode {

// Codeword lengths l_1..l_M in letters. raised_min_length records that a
// computed length of 0 was raised to 1 (words have at least one letter),
// which exempts the vector from the Kraft feasibility guarantee.
struct CodeLengths {
  std::vector<int> lengths;
  bool raised_min_length = false;

  std::size_t size() const noexcept { return lengths.size(); }
  int operator[](std::size_t i) const { return lengths[i]; }
};

// An assignment of strings over an alphabet to ranked word types.
class Code {
public:
  Code(Alphabet alphabet, std::vector<std::string> words)
      : alphabet_(std::move(alphabet)), words_(std::move(words)) {
    for (const std::string &w : words_) {
      if (w.empty())
        throw invalid_parameter("codewords must have at least one letter");
      for (char c : w)
        if (!alphabet_.contains(c))
          throw invalid_parameter("codeword uses symbol outside alphabet");
    }
  }

  const Alphabet &alphabet() const noexcept { return alphabet_; }
  const std::vector<std::string> &words() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }

  CodeLengths lengths() const {
    CodeLengths out;
    out.lengths.reserve(words_.size());
    for (const std::string &w : words_)
      out.lengths.push_back(static_cast<int>(w.size()));
    return out;
  }

private:
  Alphabet alphabet_;
  std::vector<std::string> words_;
};

namespace detail {

// Number of nonempty strings of length <= len over n letters,
// saturating instead of overflowing.
inline std::uint64_t strings_up_to(int len, int n) {
  std::uint64_t total = 0, block = 1;
  for (int l = 1; l <= len; ++l) {
    if (block > (UINT64_MAX / 2) / static_cast<std::uint64_t>(n))
      return UINT64_MAX;
    block *= static_cast<std::uint64_t>(n);
    if (total > UINT64_MAX - block)
      return UINT64_MAX;
    total += block;
  }
  return total;
}

// The rank-th string (1-based) in length-then-lexicographic order.
inline std::string nth_string(std::uint64_t rank, const Alphabet &alphabet) {
  int n = alphabet.size();
  int len = 1;
  std::uint64_t before = 0, block = static_cast<std::uint64_t>(n);
  while (before + block < rank) {
    before += block;
    block *= static_cast<std::uint64_t>(n);
    ++len;
  }
  std::uint64_t offset = rank - before - 1;
  std::string s(static_cast<std::size_t>(len), alphabet.symbol(0));
  for (int pos = len - 1; pos >= 0; --pos) {
    s[static_cast<std::size_t>(pos)] =
        alphabet.symbol(static_cast<int>(offset % n));
    offset /= static_cast<std::uint64_t>(n);
  }
  return s;
}

// Integer ceiling of log_n(x) with a guard for values that sit on an
// exact power (the log/log route can land an ulp off either side).
inline int ceil_log(double x, int n) {
  double v = std::log(x) / std::log(static_cast<double>(n));
  double r = std::round(v);
  if (std::abs(v - r) < 1e-9)
    return static_cast<int>(r);
  return static_cast<int>(std::ceil(v));
}

} // namespace detail

// Shortest possible codeword lengths for an injective (non-singular)
// code: l_i = ceil(log_N((N-1)/N * i + 1)), realized by counting how
// many strings exist below each length.
inline CodeLengths nonsingular_optimal_lengths(std::uint64_t m, int n) {
  if (m < 1)
    throw invalid_parameter("vocabulary size must be >= 1");
  if (n < 2)
    throw invalid_parameter("alphabet size must be >= 2");
  CodeLengths out;
  out.lengths.reserve(m);
  int len = 1;
  std::uint64_t cumulative = detail::strings_up_to(1, n);
  for (std::uint64_t i = 1; i <= m; ++i) {
    while (cumulative < i) {
      ++len;
      cumulative = detail::strings_up_to(len, n);
    }
    out.lengths.push_back(len);
  }
  return out;
}

// The optimal non-singular code itself: the first M strings in
// length-then-lexicographic order.
inline Code nonsingular_optimal_code(std::uint64_t m, const Alphabet &alphabet) {
  if (m < 1)
    throw invalid_parameter("vocabulary size must be >= 1");
  std::vector<std::string> words;
  words.reserve(m);
  for (std::uint64_t i = 1; i <= m; ++i)
    words.push_back(detail::nth_string(i, alphabet));
  return Code(alphabet, std::move(words));
}

inline Code nonsingular_optimal_code(std::uint64_t m, int n) {
  return nonsingular_optimal_code(m, Alphabet(n));
}

// Shannon lengths l_i = ceil(-log_N p_i); a computed 0 (p_i = 1) is
// raised to 1 and flagged.
inline CodeLengths shannon_lengths(const ProbabilityDistribution &p, int n) {
  if (n < 2)
    throw invalid_parameter("alphabet size must be >= 2");
  CodeLengths out;
  out.lengths.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    int l = detail::ceil_log(1.0 / p[i], n);
    if (l < 1) {
      l = 1;
      out.raised_min_length = true;
    }
    out.lengths.push_back(l);
  }
  return out;
}

// Exactly optimal N-ary prefix-code lengths (Huffman), with the usual
// zero-probability dummy leaves so the first merge is full:
// (M - 1) mod (N - 1) == 0 after padding. Ties in the queue are broken
// by earliest insertion.
inline CodeLengths huffman_lengths(const ProbabilityDistribution &p, int n) {
  if (n < 2)
    throw invalid_parameter("alphabet size must be >= 2");
  std::size_t m = p.size();
  if (m == 1)
    return CodeLengths{{1}, true};

  std::size_t dummies = 0;
  while ((m + dummies - 1) % static_cast<std::size_t>(n - 1) != 0)
    ++dummies;

  struct Node {
    double prob;
    std::size_t id;
  };
  auto worse = [](const Node &a, const Node &b) {
    return std::tie(a.prob, a.id) > std::tie(b.prob, b.id);
  };
  std::priority_queue<Node, std::vector<Node>, decltype(worse)> queue(worse);
  std::vector<std::size_t> parent(m + dummies, SIZE_MAX);
  std::size_t next_id = 0;
  for (std::size_t i = 0; i < m; ++i)
    queue.push({p[i], next_id++});
  for (std::size_t i = 0; i < dummies; ++i)
    queue.push({0.0, next_id++});

  while (queue.size() > 1) {
    double prob = 0.0;
    std::size_t merged = next_id++;
    parent.push_back(SIZE_MAX);
    for (int k = 0; k < n && !queue.empty(); ++k) {
      Node leaf = queue.top();
      queue.pop();
      prob += leaf.prob;
      parent[leaf.id] = merged;
    }
    queue.push({prob, merged});
  }

  CodeLengths out;
  out.lengths.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    int depth = 0;
    for (std::size_t node = i; parent[node] != SIZE_MAX; node = parent[node])
      ++depth;
    out.lengths.push_back(depth);
  }
  // Equal-probability leaves can come out in any depth order; pairing the
  // sorted lengths with the ranked probabilities keeps the mean minimal.
  std::sort(out.lengths.begin(), out.lengths.end());
  return out;
}

// Kraft-McMillan sum over the length vector; a uniquely decipherable
// code with these lengths exists iff the sum is <= 1.
inline double kraft_sum(const CodeLengths &lengths, int n) {
  if (lengths.size() == 0)
    throw invalid_parameter("empty length vector");
  double sum = 0.0;
  for (int l : lengths.lengths)
    sum += std::pow(static_cast<double>(n), -static_cast<double>(l));
  return sum;
}

// Mean word length L = sum p_i * l_i, in letters per token.
inline double mean_code_length(const ProbabilityDistribution &p,
                               const CodeLengths &lengths) {
  if (p.size() != lengths.size())
    throw invalid_parameter("size-mismatch between distribution and lengths");
  double mean = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    mean += p[i] * lengths[i];
  return mean;
}

inline bool is_nonsingular(const Code &code) {
  std::set<std::string> seen(code.words().begin(), code.words().end());
  return seen.size() == code.size();
}

// Sardinas-Patterson decision procedure: iterate dangling-suffix sets;
// the code is uniquely decipherable iff no set ever contains a codeword.
inline bool is_uniquely_decipherable(const Code &code) {
  if (!is_nonsingular(code))
    return false;
  const std::set<std::string> words(code.words().begin(), code.words().end());

  auto dangling = [&](const std::set<std::string> &left,
                      const std::set<std::string> &right) {
    std::set<std::string> out;
    for (const std::string &a : left)
      for (const std::string &b : right)
        if (b.size() > a.size() && b.compare(0, a.size(), a) == 0)
          out.insert(b.substr(a.size()));
    return out;
  };

  std::set<std::string> current = dangling(words, words);
  std::set<std::set<std::string>> seen;
  while (!current.empty() && seen.insert(current).second) {
    for (const std::string &s : current)
      if (words.count(s))
        return false;
    std::set<std::string> next = dangling(current, words);
    std::set<std::string> back = dangling(words, current);
    next.insert(back.begin(), back.end());
    current = std::move(next);
  }
  return true;
}

} // namespace zipfcode
