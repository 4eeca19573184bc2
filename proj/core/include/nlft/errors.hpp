#pragma once

#include <stdexcept>

namespace nlft {

/// Malformed or contract-violating input. The CLI maps it to exit status 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical failure on valid input: moments that are not positive
/// definite, a resonance (a = 0), a Schur pole, or a quadrature budget that
/// ran out. The CLI maps it to exit status 2.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nlft
