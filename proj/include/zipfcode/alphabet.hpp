#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "zipfcode/errors.hpp"

namespace zipfcode {

// An ordered set of N distinct letters. The default inventory is a-z
// followed by 0-9, which covers N up to 36; larger alphabets need
// explicit symbols.
class Alphabet {
public:
  explicit Alphabet(int n) : symbols_(default_symbols(n)) {}

  explicit Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
    if (symbols_.size() < 2)
      throw invalid_parameter("alphabet needs at least 2 symbols");
    std::unordered_set<char> seen(symbols_.begin(), symbols_.end());
    if (seen.size() != symbols_.size())
      throw invalid_parameter("alphabet symbols must be distinct");
  }

  int size() const noexcept { return static_cast<int>(symbols_.size()); }
  char symbol(int index) const { return symbols_.at(index); }
  const std::string &symbols() const noexcept { return symbols_; }

  bool contains(char c) const noexcept {
    return symbols_.find(c) != std::string::npos;
  }

private:
  static std::string default_symbols(int n) {
    if (n < 2)
      throw invalid_parameter("alphabet size must be >= 2");
    static const std::string pool =
        "abcdefghijklmnopqrstuvwxyz0123456789";
    if (static_cast<std::size_t>(n) > pool.size())
      throw invalid_parameter(
          "no default symbols for alphabets larger than 36; pass them "
          "explicitly");
    return pool.substr(0, static_cast<std::size_t>(n));
  }

  std::string symbols_;
};

} // namespace zipfcode
