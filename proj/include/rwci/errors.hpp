#pragma once

#include <stdexcept>
#include <string>

namespace rwci {

// Bad caller input: out-of-range parameters, malformed files, unknown names.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// The input parsed, but a numerical invariant does not hold (indefinite
// covariance, canonical correlation above one, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rwci
