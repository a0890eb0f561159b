#pragma once

#include <stdexcept>
#include <string>

namespace central {

/// Fatal numerical diagnostic raised by the solvers. The CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A NaN or Inf appeared in a state or right-hand side.
class NonFiniteState : public NumericalError {
 public:
  NonFiniteState(const std::string& where, int cell_x, int cell_y = -1)
      : NumericalError(where + ": non-finite value at cell " + std::to_string(cell_x) +
                       (cell_y >= 0 ? "," + std::to_string(cell_y) : std::string{})),
        cell_x_(cell_x),
        cell_y_(cell_y) {}

  int cell() const noexcept { return cell_x_; }
  int cell_y() const noexcept { return cell_y_; }

 private:
  int cell_x_;
  int cell_y_;
};

/// Negative density or pressure in a gas-dynamics state.
class NonPhysicalState : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Vorticity handed to the periodic Poisson solve is incompatible with zero-mean forcing.
class ZeroMeanViolation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Step-count guard tripped in the time integrator.
class RunawayIntegration : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Invalid experiment configuration. The CLI maps these to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Resolutions passed to a convergence table do not double from row to row.
class MismatchedResolutions : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact solution requested outside the interval where it is classical.
class OutOfSmoothRegime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace central
