#ifndef LOGITFIELD_ERRORS_HPP
#define LOGITFIELD_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace logitfield {

// Shape/dimension mismatch between grids, vectors, or trajectories.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Closed-form control cost requested for a kappa without one.
class UnsupportedKappaError : public std::domain_error {
 public:
  explicit UnsupportedKappaError(const std::string& msg) : std::domain_error(msg) {}
};

// Explicit time step produced an invalid state (negative mass, non-finite field).
class StabilityError : public std::runtime_error {
 public:
  explicit StabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Iteration hit its step/iteration budget; carries the final residual.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& msg, double residual)
      : std::runtime_error(msg), residual(residual) {}
  double residual;
};

}  // namespace logitfield

#endif
