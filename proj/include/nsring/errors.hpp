#pragma once

#include <stdexcept>
#include <string>

namespace nsring {

// Base class for all input/domain errors raised by the engine.
// The CLI maps these to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyGeneratorsError : Error {
  EmptyGeneratorsError() : Error("generator list is empty") {}
};

struct ZeroGeneratorError : Error {
  explicit ZeroGeneratorError(long long g)
      : Error("generators must be positive (got " + std::to_string(g) + ")") {}
};

struct NonCoprimeError : Error {
  explicit NonCoprimeError(long long d)
      : Error("generators must have gcd 1 (got gcd " + std::to_string(d) + ")") {}
};

struct NotAMemberError : Error {
  explicit NotAMemberError(long long n)
      : Error(std::to_string(n) + " is not a nonzero element of the semigroup") {}
};

struct ParentMismatchError : Error {
  ParentMismatchError() : Error("ideals belong to different semigroups") {}
};

struct NotContainedError : Error {
  NotContainedError() : Error("ideal is not contained in the ring") {}
};

struct BadTemplateError : Error {
  explicit BadTemplateError(const std::string& what) : Error("bad family template: " + what) {}
};

struct WhereSyntaxError : Error {
  explicit WhereSyntaxError(const std::string& what) : Error("bad --where expression: " + what) {}
};

// Raised when an exact computation would need a table beyond the hard cap.
struct WindowLimitError : Error {
  explicit WindowLimitError(long long w)
      : Error("computation window too large (" + std::to_string(w) + " entries)") {}
};

}  // namespace nsring
