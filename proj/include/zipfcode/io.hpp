#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "zipfcode/coding.hpp"
#include "zipfcode/errors.hpp"
#include "zipfcode/estimation.hpp"
#include "zipfcode/random_typing.hpp"

namespace zipfcode {
namespace csv {

inline std::string quote(const std::string &field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos)
    return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"')
      out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Splits one CSV record; handles quoted fields with doubled quotes.
inline std::vector<std::string> split(const std::string &line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

} // namespace csv

// --- word,count frequency files ---------------------------------------

struct WordCount {
  std::string word;
  std::uint64_t count;
};

inline std::vector<WordCount> read_word_counts(std::istream &in) {
  std::vector<WordCount> out;
  std::string line;
  bool header = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    auto fields = csv::split(line);
    if (header) {
      header = false;
      if (fields.size() >= 2 && fields[0] == "word" && fields[1] == "count")
        continue; // skip header row
    }
    if (fields.size() < 2)
      throw invalid_parameter("malformed frequency CSV at line " +
                              std::to_string(line_no));
    try {
      out.push_back({fields[0], std::stoull(fields[1])});
    } catch (const std::exception &) {
      throw invalid_parameter("bad count in frequency CSV at line " +
                              std::to_string(line_no));
    }
  }
  return out;
}

// --- rank,word,count tables -------------------------------------------

inline void write_rank_frequency(std::ostream &out,
                                 const RankFrequencyTable &table) {
  out << "rank,word,count\n";
  for (const auto &e : table.entries)
    out << e.rank << ',' << csv::quote(e.word) << ',' << e.count << '\n';
}

inline RankFrequencyTable read_rank_frequency(std::istream &in) {
  RankFrequencyTable table;
  std::string line;
  bool header = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    auto fields = csv::split(line);
    if (header) {
      header = false;
      if (fields.size() >= 3 && fields[0] == "rank" && fields[1] == "word")
        continue;
    }
    if (fields.size() < 3)
      throw invalid_parameter("malformed rank-frequency CSV at line " +
                              std::to_string(line_no));
    try {
      table.entries.push_back(
          {std::stoull(fields[0]), fields[1], std::stoull(fields[2])});
    } catch (const std::exception &) {
      throw invalid_parameter("bad number in rank-frequency CSV at line " +
                              std::to_string(line_no));
    }
    table.total_tokens += table.entries.back().count;
  }
  return table;
}

// --- code tables -------------------------------------------------------

inline void write_code(std::ostream &out, const Code &code) {
  out << "rank,string,length\n";
  const auto &words = code.words();
  for (std::size_t i = 0; i < words.size(); ++i)
    out << (i + 1) << ',' << csv::quote(words[i]) << ',' << words[i].size()
        << '\n';
}

inline void write_lengths(std::ostream &out, const CodeLengths &lengths) {
  out << "rank,string,length\n";
  for (std::size_t i = 0; i < lengths.size(); ++i)
    out << (i + 1) << ",," << lengths[i] << '\n';
}

// --- analytic type tables ---------------------------------------------

inline void write_type_table(std::ostream &out, const RankedTypeTable &table) {
  out << "rank,word,probability,length\n";
  std::ostringstream fmt;
  fmt.precision(17);
  for (const auto &e : table.entries) {
    fmt.str("");
    fmt << e.probability;
    out << e.rank << ',' << csv::quote(e.word) << ',' << fmt.str() << ','
        << e.length << '\n';
  }
}

// --- token streams -----------------------------------------------------

inline void write_tokens(std::ostream &out,
                         const std::vector<std::string> &tokens) {
  for (const std::string &t : tokens)
    out << t << '\n';
}

inline std::vector<std::string> read_tokens(std::istream &in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    tokens.push_back(line);
  }
  // trailing blank line is an artifact, not an empty token
  if (!tokens.empty() && tokens.back().empty())
    tokens.pop_back();
  return tokens;
}

} // namespace zipfcode
