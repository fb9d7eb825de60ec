#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kappa {

// Caller supplied something malformed (bad edge, zero parameter, ...).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Text could not be decoded. `offset` is a byte offset for graph6 and a
// 1-based line number for edge lists; `what()` says which.
class ParseError : public InputError {
public:
  ParseError(const std::string & message, std::size_t offset)
      : InputError(message), _offset(offset) {}

  auto offset() const -> std::size_t { return _offset; }

private:
  std::size_t _offset;
};

// Exponential routine refused an instance above its configured size cap.
class SizeCapError : public std::runtime_error {
public:
  SizeCapError(const std::string & what, int n, int cap)
      : std::runtime_error(what + ": n=" + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap)),
        _n(n), _cap(cap) {}

  auto n() const -> int { return _n; }
  auto cap() const -> int { return _cap; }

private:
  int _n;
  int _cap;
};

// Programming error: mismatched universes, wrong dimensions.
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace kappa
