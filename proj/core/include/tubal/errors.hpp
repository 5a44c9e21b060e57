#pragma once

#include <stdexcept>
#include <string>

namespace tubal {

struct DimMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SymmetryViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidConfig : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidRank : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NormNotUnit : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroReference : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonFinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ImageFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tubal
