#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zipfcode {

// Bad argument values (sizes, ranges, malformed parameters).
class invalid_parameter : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A probability vector that is not a valid ranked distribution.
class invalid_distribution : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Invalid UTF-8 in an input stream; carries the byte offset of the
// offending byte.
class encoding_error : public std::runtime_error {
public:
  encoding_error(std::size_t byte_offset)
      : std::runtime_error("encoding-error: invalid UTF-8 at byte offset " +
                           std::to_string(byte_offset)),
        offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

// A statistic is undefined because one of its inputs is constant.
class constant_input_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Enumeration or generation request exceeding the configured cap.
class resource_limit_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace zipfcode
