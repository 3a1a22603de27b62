#pragma once

#include <stdexcept>
#include <string>

namespace cgt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parameter out of range (e.g. G(n) with n < 2).
struct ParamError : Error {
  using Error::Error;
};

// Two words/presentations over incompatible alphabets.
struct AlphabetMismatchError : Error {
  using Error::Error;
};

// An exact answer was lost to the saturation cap; callers surface this as
// an "undecided" verdict rather than guessing.
struct CapError : Error {
  using Error::Error;
};

// Cell budgets, state budgets and similar resource limits.
struct ResourceError : Error {
  using Error::Error;
};

// Malformed serialized input.
struct FormatError : Error {
  using Error::Error;
};

// Operation applied to a diagram that fails validation.
struct InvalidDiagramError : Error {
  using Error::Error;
};

}  // namespace cgt
