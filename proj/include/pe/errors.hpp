#pragma once

#include <stdexcept>
#include <string>

namespace pe {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CountMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigInvalid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pe
