#pragma once

#include <stdexcept>
#include <string>

namespace semicurve {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed text, invalid curve, degenerate ideal, arity mismatch.
class UserError : public Error {
 public:
  using Error::Error;
};

/// A condition the theory guarantees failed to hold. Signals a bug or an
/// input that slipped past validation.
class InternalError : public Error {
 public:
  using Error::Error;
};

inline void internal_check(bool condition, const std::string& what) {
  if (!condition) throw InternalError(what);
}

}  // namespace semicurve
