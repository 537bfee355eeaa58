#pragma once

#include <stdexcept>
#include <string>

namespace evb {

// Invalid physical input (non-positive field, ell == 0 where a vortex is
// required, ...). Maps to exit code 2 at the CLI together with ConfigError.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Configuration file / option errors. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A series or iteration failed to converge within its budget. CLI exit code 3.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Propagated energy reached the grid boundary. CLI exit code 4.
class BoundarySpillError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Grid cannot represent the field bandwidth (spectral tail above tolerance).
class BandwidthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bohmian velocity requested inside a node neighbourhood (density below the
// floor); streamline integrators catch this and truncate.
class NodeProximityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace evb
