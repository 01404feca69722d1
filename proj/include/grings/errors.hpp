#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grings {

/// A construction or enumeration would exceed a configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mini-language parse failure. `position` is the 0-based column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at column " +
                           std::to_string(position + 1) + ": " + what),
        position_(position),
        detail_(what) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the column prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

}  // namespace grings
