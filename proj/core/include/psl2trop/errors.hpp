#pragma once

#include <stdexcept>
#include <string>

namespace psl2trop {

// Input could not be parsed; `offset` is the byte position of the failure.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// A truncated series does not carry enough guaranteed terms to decide the
// requested computation. Callers may retry with a larger depth.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Mathematical precondition violated (zero divisor, singular matrix, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace psl2trop
