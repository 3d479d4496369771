#pragma once

#include <stdexcept>
#include <string>

namespace heatbar {

/// Bad user input: parameters, config files, material references.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation could not produce a trustworthy result (divergence,
/// exhausted root search, quadrature failure, singular evaluation point).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace heatbar
