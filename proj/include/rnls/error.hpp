#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rnls {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violation on a public entry point (bad L, K, eps, bracket...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Two objects that must describe the same problem do not (grid vs oracle L, eps...).
class ParameterMismatch : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Failure of a numerical kernel. When raised from a time loop, step() and
/// time() identify the step that failed; otherwise step() is -1.
class NumericalFailure : public Error {
 public:
  enum class Kind { singular, blow_up, non_finite, eigensolver, quadrature, discretization };

  NumericalFailure(Kind kind, const std::string& what, long step = -1,
                   double time = std::numeric_limits<double>::quiet_NaN())
      : Error(what), kind_(kind), step_(step), time_(time) {}

  Kind kind() const noexcept { return kind_; }
  long step() const noexcept { return step_; }
  double time() const noexcept { return time_; }

  NumericalFailure at_step(long step, double time) const {
    return NumericalFailure(kind_,
                            std::string(what()) + " (step " + std::to_string(step) +
                                ", t = " + std::to_string(time) + ")",
                            step, time);
  }

 private:
  Kind kind_;
  long step_;
  double time_;
};

}  // namespace rnls
