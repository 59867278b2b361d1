#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bhsp {

// Raised when a computed quantity contradicts an identity that must hold
// (for example two characterizations of bentness disagreeing). Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Syntax or validation failure while reading a text format.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace bhsp
