#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "zipfcode/errors.hpp"

namespace zipfcode {

struct RankFrequencyEntry {
  std::uint64_t rank;
  std::string word;
  std::uint64_t count;
};

// Word types ordered by descending count (ties lexicographic), 1-based
// ranks.
struct RankFrequencyTable {
  std::vector<RankFrequencyEntry> entries;
  std::uint64_t total_tokens = 0;
};

inline RankFrequencyTable
build_rank_frequency(const std::vector<std::string> &tokens) {
  if (tokens.empty())
    throw invalid_parameter("empty-input: no tokens");
  std::map<std::string, std::uint64_t> counts;
  for (const std::string &t : tokens)
    ++counts[t];
  RankFrequencyTable table;
  table.entries.reserve(counts.size());
  for (auto &[word, count] : counts)
    table.entries.push_back({0, word, count});
  std::stable_sort(table.entries.begin(), table.entries.end(),
                   [](const RankFrequencyEntry &a, const RankFrequencyEntry &b) {
                     if (a.count != b.count)
                       return a.count > b.count;
                     return a.word < b.word;
                   });
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    table.entries[i].rank = i + 1;
    table.total_tokens += table.entries[i].count;
  }
  return table;
}

enum class FitMethod { mle, regression };

struct FitResult {
  double alpha = 0.0;
  FitMethod method = FitMethod::mle;
  std::uint64_t rank_min = 0;
  std::uint64_t rank_max = 0;
  double ks_statistic = 0.0;
  double log_likelihood = std::numeric_limits<double>::quiet_NaN();
  bool at_boundary = false; // search ended on the alpha bracket edge
};

namespace detail {

struct FitWindow {
  std::vector<std::uint64_t> ranks;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
};

inline FitWindow extract_window(const RankFrequencyTable &table,
                                std::uint64_t rank_min,
                                std::uint64_t rank_max) {
  FitWindow w;
  for (const auto &e : table.entries) {
    if (e.rank < rank_min || e.rank > rank_max)
      continue;
    w.ranks.push_back(e.rank);
    w.counts.push_back(e.count);
    w.total += e.count;
  }
  if (w.ranks.size() < 2)
    throw invalid_parameter("window-too-small: need at least 2 ranks");
  return w;
}

// log of the truncated zeta normalizer over the window's ranks
inline double log_normalizer(const FitWindow &w, double alpha) {
  double h = 0.0;
  for (std::uint64_t i : w.ranks)
    h += std::pow(static_cast<double>(i), -alpha);
  return std::log(h);
}

inline double log_likelihood(const FitWindow &w, double alpha) {
  double log_h = log_normalizer(w, alpha);
  double ll = 0.0;
  for (std::size_t k = 0; k < w.ranks.size(); ++k)
    ll += static_cast<double>(w.counts[k]) *
          (-alpha * std::log(static_cast<double>(w.ranks[k])) - log_h);
  return ll;
}

// max |empirical CDF - model CDF| over the window, with the model being
// the truncated Zipf pmf at the fitted alpha
inline double ks_statistic(const FitWindow &w, double alpha) {
  double h = std::exp(log_normalizer(w, alpha));
  double emp = 0.0, model = 0.0, d = 0.0;
  for (std::size_t k = 0; k < w.ranks.size(); ++k) {
    emp += static_cast<double>(w.counts[k]) / static_cast<double>(w.total);
    model += std::pow(static_cast<double>(w.ranks[k]), -alpha) / h;
    d = std::max(d, std::abs(emp - model));
  }
  return d;
}

} // namespace detail

// Maximum-likelihood Zipf exponent over a rank window: golden-section
// search of the truncated-zeta likelihood on alpha in [0.05, 10] to
// 1e-6. A result stuck on a bracket edge (e.g. near-uniform counts
// pushing alpha to 0) is flagged.
inline FitResult fit_zipf_mle(const RankFrequencyTable &table,
                              std::uint64_t rank_min, std::uint64_t rank_max) {
  detail::FitWindow w = detail::extract_window(table, rank_min, rank_max);
  if (*std::max_element(w.counts.begin(), w.counts.end()) == w.total)
    throw invalid_parameter("degenerate-data: all mass on one rank");

  constexpr double kAlphaLo = 0.05, kAlphaHi = 10.0, kTol = 1e-6;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = kAlphaLo, hi = kAlphaHi;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = detail::log_likelihood(w, x1);
  double f2 = detail::log_likelihood(w, x2);
  while (hi - lo > kTol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = detail::log_likelihood(w, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = detail::log_likelihood(w, x1);
    }
  }

  FitResult result;
  result.alpha = (lo + hi) / 2.0;
  result.method = FitMethod::mle;
  result.rank_min = w.ranks.front();
  result.rank_max = w.ranks.back();
  result.log_likelihood = detail::log_likelihood(w, result.alpha);
  result.ks_statistic = detail::ks_statistic(w, result.alpha);
  result.at_boundary = result.alpha - kAlphaLo < 10 * kTol ||
                       kAlphaHi - result.alpha < 10 * kTol;
  return result;
}

// Log-log regression exponent: alpha = -slope of ln(count) on ln(rank).
inline FitResult fit_zipf_regression(const RankFrequencyTable &table,
                                     std::uint64_t rank_min,
                                     std::uint64_t rank_max) {
  detail::FitWindow w = detail::extract_window(table, rank_min, rank_max);
  double n = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < w.ranks.size(); ++k) {
    double x = std::log(static_cast<double>(w.ranks[k]));
    double y = std::log(static_cast<double>(w.counts[k]));
    n += 1;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double var = sxx - sx * sx / n;
  if (var <= 0.0)
    throw invalid_parameter("degenerate-data: no rank spread");

  FitResult result;
  result.alpha = -(sxy - sx * sy / n) / var;
  result.method = FitMethod::regression;
  result.rank_min = w.ranks.front();
  result.rank_max = w.ranks.back();
  result.ks_statistic = detail::ks_statistic(w, result.alpha);
  return result;
}

namespace detail {

// midranks: ties share the average of the positions they occupy
inline std::vector<double> midranks(const std::vector<double> &values) {
  std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i)
    order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]])
      ++j;
    double mid = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k)
      ranks[order[k]] = mid;
    i = j + 1;
  }
  return ranks;
}

} // namespace detail

// Spearman rank correlation between per-type counts and lengths;
// negative under the law of abbreviation. Undefined (and signaled) when
// either input is constant.
inline double spearman_correlation(const std::vector<double> &a,
                                   const std::vector<double> &b) {
  if (a.size() != b.size())
    throw invalid_parameter("size-mismatch between inputs");
  if (a.size() < 2)
    throw invalid_parameter("need at least 2 observations");
  std::vector<double> ra = detail::midranks(a);
  std::vector<double> rb = detail::midranks(b);
  double n = static_cast<double>(a.size());
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += ra[i];
    mb += rb[i];
  }
  ma /= n;
  mb /= n;
  double cov = 0, va = 0, vb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cov += (ra[i] - ma) * (rb[i] - mb);
    va += (ra[i] - ma) * (ra[i] - ma);
    vb += (rb[i] - mb) * (rb[i] - mb);
  }
  if (va == 0.0 || vb == 0.0)
    throw constant_input_error("correlation undefined for constant input");
  return cov / std::sqrt(va * vb);
}

inline double
length_frequency_correlation(const RankFrequencyTable &table,
                             const std::vector<double> &type_lengths) {
  if (type_lengths.size() != table.entries.size())
    throw invalid_parameter("one length per type required");
  std::vector<double> counts;
  counts.reserve(table.entries.size());
  for (const auto &e : table.entries)
    counts.push_back(static_cast<double>(e.count));
  return spearman_correlation(counts, type_lengths);
}

} // namespace zipfcode
