#ifndef VALFROB_ERRORS_HPP
#define VALFROB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace valfrob {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed expression text. `position` is a byte offset into the input.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// An operation was applied outside its mathematical domain
// (zero denominator, arity mismatch, value outside the valuation ring, ...).
struct DomainError : Error {
  using Error::Error;
};

// A lazy computation ran out of its precision budget before it could certify
// an answer. `cap` is the budget that was exhausted.
struct PrecisionExhausted : Error {
  long cap;
  PrecisionExhausted(const std::string& msg, long cap_used)
      : Error(msg + " (cap " + std::to_string(cap_used) + ")"), cap(cap_used) {}
};

}  // namespace valfrob

#endif
