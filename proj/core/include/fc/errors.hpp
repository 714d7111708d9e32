#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fc {

/// A mathematically invalid request: zero polynomial where a nonzero one is
/// required, a repeated factor, an argument below a theorem's hypothesis.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed polynomial text. `offset()` is the byte offset of the failure.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace fc
