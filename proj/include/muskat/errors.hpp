#pragma once

#include <stdexcept>
#include <string>

namespace muskat {

/// Invalid configuration (bad grid sizes, malformed quadrature, bad keys...).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite values encountered during a numeric operation.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A Fourier weight failed evaluation or certification.
struct WeightError : std::runtime_error {
  explicit WeightError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem / serialization failure.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace muskat
