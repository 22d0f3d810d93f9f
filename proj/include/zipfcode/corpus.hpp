#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "zipfcode/coding.hpp"
#include "zipfcode/distribution.hpp"
#include "zipfcode/errors.hpp"
#include "zipfcode/estimation.hpp"

namespace zipfcode {
namespace detail {

// Decodes one UTF-8 scalar value starting at `pos`, advancing it.
// Throws encoding_error (with the byte offset) on malformed input.
inline char32_t decode_utf8(std::string_view text, std::size_t &pos) {
  std::size_t start = pos;
  unsigned char lead = static_cast<unsigned char>(text[pos]);
  int extra;
  char32_t cp;
  if (lead < 0x80) {
    extra = 0;
    cp = lead;
  } else if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    throw encoding_error(start);
  }
  if (pos + static_cast<std::size_t>(extra) >= text.size())
    throw encoding_error(start);
  ++pos;
  for (int k = 0; k < extra; ++k, ++pos) {
    unsigned char cont = static_cast<unsigned char>(text[pos]);
    if ((cont & 0xC0) != 0x80)
      throw encoding_error(start);
    cp = (cp << 6) | (cont & 0x3F);
  }
  // reject overlong encodings and surrogates
  if ((extra == 1 && cp < 0x80) || (extra == 2 && cp < 0x800) ||
      (extra == 3 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF) ||
      cp > 0x10FFFF)
    throw encoding_error(start);
  return cp;
}

inline void append_utf8(std::string &out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline bool is_unicode_space(char32_t cp) {
  switch (cp) {
  case U' ':
  case U'\t':
  case U'\n':
  case U'\r':
  case U'\f':
  case U'\v':
  case 0x0085: // NEL
  case 0x00A0: // no-break space
  case 0x1680:
  case 0x2028:
  case 0x2029:
  case 0x202F:
  case 0x205F:
  case 0x3000:
    return true;
  default:
    return cp >= 0x2000 && cp <= 0x200A;
  }
}

// Edge punctuation stripped from token boundaries: ASCII punctuation
// plus the common typographic quotes/dashes/ellipsis.
inline bool is_edge_punctuation(char32_t cp) {
  if (cp < 0x80) {
    char c = static_cast<char>(cp);
    return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
           (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
  }
  switch (cp) {
  case 0x2018:
  case 0x2019:
  case 0x201C:
  case 0x201D:
  case 0x2013:
  case 0x2014:
  case 0x2026:
  case 0x00A1:
  case 0x00BF:
  case 0x00AB:
  case 0x00BB:
    return true;
  default:
    return false;
  }
}

} // namespace detail

// Number of Unicode scalar values in a UTF-8 string.
inline std::size_t codepoint_length(std::string_view text) {
  std::size_t pos = 0, count = 0;
  while (pos < text.size()) {
    detail::decode_utf8(text, pos);
    ++count;
  }
  return count;
}

// Splits UTF-8 text into lowercased tokens on Unicode whitespace,
// stripping leading/trailing punctuation; empty results are dropped.
inline std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::vector<char32_t> word;

  auto flush = [&]() {
    std::size_t begin = 0, end = word.size();
    while (begin < end && detail::is_edge_punctuation(word[begin]))
      ++begin;
    while (end > begin && detail::is_edge_punctuation(word[end - 1]))
      --end;
    if (begin < end) {
      std::string token;
      for (std::size_t k = begin; k < end; ++k)
        detail::append_utf8(token, word[k]);
      tokens.push_back(std::move(token));
    }
    word.clear();
  };

  std::size_t pos = 0;
  while (pos < text.size()) {
    char32_t cp = detail::decode_utf8(text, pos);
    if (detail::is_unicode_space(cp)) {
      flush();
    } else {
      if (cp >= U'A' && cp <= U'Z')
        cp += 0x20;
      word.push_back(cp);
    }
  }
  flush();
  return tokens;
}

struct CorpusStats {
  RankFrequencyTable table;
  std::vector<std::size_t> type_lengths; // Unicode scalar values per type
  double actual_mean_length = 0.0;
  double optimal_ns_mean_length = 0.0;
  double optimal_ud_mean_length = 0.0;
  double optimality_ratio = 0.0;
  int alphabet_size_used = 0;
};

// Number of distinct Unicode scalar values across the type inventory,
// floored at 2 so the coding baselines are defined.
inline int observed_alphabet_size(const RankFrequencyTable &table) {
  std::set<char32_t> inventory;
  for (const auto &e : table.entries) {
    std::size_t pos = 0;
    while (pos < e.word.size())
      inventory.insert(detail::decode_utf8(e.word, pos));
  }
  return std::max<int>(2, static_cast<int>(inventory.size()));
}

// Rank-frequency table plus mean-length accounting: the corpus's actual
// frequency-weighted mean word length against the optimal non-singular
// and optimal uniquely decipherable (Shannon) baselines for the same
// distribution. alphabet_size 0 means "use the observed inventory".
inline CorpusStats corpus_report(const std::vector<std::string> &tokens,
                                 int alphabet_size = 0) {
  if (tokens.empty())
    throw invalid_parameter("empty-input: no tokens");

  CorpusStats stats;
  stats.table = build_rank_frequency(tokens);
  stats.alphabet_size_used = alphabet_size > 0
                                 ? alphabet_size
                                 : observed_alphabet_size(stats.table);

  std::vector<double> counts;
  counts.reserve(stats.table.entries.size());
  double weighted_length = 0.0;
  for (const auto &e : stats.table.entries) {
    std::size_t len = codepoint_length(e.word);
    stats.type_lengths.push_back(len);
    counts.push_back(static_cast<double>(e.count));
    weighted_length += static_cast<double>(e.count) * static_cast<double>(len);
  }
  stats.actual_mean_length =
      weighted_length / static_cast<double>(stats.table.total_tokens);

  ProbabilityDistribution dist = distribution_from_counts(counts);
  stats.optimal_ns_mean_length = mean_code_length(
      dist, nonsingular_optimal_lengths(dist.size(), stats.alphabet_size_used));
  stats.optimal_ud_mean_length =
      mean_code_length(dist, shannon_lengths(dist, stats.alphabet_size_used));
  stats.optimality_ratio =
      stats.actual_mean_length > 0.0
          ? stats.optimal_ns_mean_length / stats.actual_mean_length
          : 0.0;
  return stats;
}

} // namespace zipfcode
