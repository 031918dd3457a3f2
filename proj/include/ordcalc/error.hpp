#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordcalc {

/// A request that is well-formed but outside what the operation is defined
/// for (zero has no smallest exponent, a step set names an unsupported
/// position, an enumeration bound is exceeded, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed surface syntax or a malformed input document.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  explicit ParseError(const std::string& what)
      : std::runtime_error(what), position_(npos) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ordcalc
