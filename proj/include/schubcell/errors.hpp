#pragma once

#include <stdexcept>
#include <string>

namespace schubcell {

/// Malformed user input (matrix text, ragged rows, bad flags).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The ground set exceeds the configured size limit.
class GuardrailError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace schubcell
