#pragma once

#include <vector>

#include "rnls/evolve.hpp"
#include "rnls/grid.hpp"

namespace rnls {

/// a_n = (1/L) int_{-L}^{L} tanh(xi) cos(k_n (xi + L)) dxi, n = 0..n_max, with
/// k_n = pi n / (2L). Throws NumericalFailure(quadrature) if the panel-doubling
/// quadrature cannot reach an absolute error of `tolerance` per coefficient.
std::vector<double> fourier_coefficients(double half_length, int n_max,
                                         double tolerance = 1e-12);

/// Exact cosine-series solution of the linear Neumann problem
/// i (1 - eps^2 d^2) u_t + u_xx = 0 with u(0) = tanh.
class FourierSolution {
 public:
  static FourierSolution compute(double half_length, double eps, int n_max = 2000);

  double half_length() const noexcept { return half_length_; }
  double eps() const noexcept { return eps_; }
  int n_max() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<double>& coefficients() const noexcept { return coefficients_; }
  double wavenumber(int n) const noexcept;
  /// exp(-i k_n^2 t / (1 + eps^2 k_n^2))
  cplx phase(int n, double t) const noexcept;
  /// Largest |a_n| over the last tenth of the computed coefficients.
  double tail_magnitude() const noexcept;

  cplx evaluate_at(double t, double xi) const;
  /// Partial sum on every grid node; throws ParameterMismatch unless the
  /// grid half-length equals half_length().
  ComplexField evaluate(double t, const Grid& grid) const;

 private:
  FourierSolution(double half_length, double eps, std::vector<double> coefficients)
      : half_length_(half_length), eps_(eps), coefficients_(std::move(coefficients)) {}

  double half_length_;
  double eps_;
  std::vector<double> coefficients_;
};

struct ErrorSample {
  double t;
  double error;
};

/// max_k |u_fd(t, xi_k) - u_exact(t, xi_k)| at each snapshot of a linear-scheme
/// trajectory. Throws ParameterMismatch on a nonlinear trajectory, a nonzero
/// amplitude, or mismatched eps or L.
std::vector<ErrorSample> error_function(const Trajectory& fd, const FourierSolution& exact);

}  // namespace rnls
