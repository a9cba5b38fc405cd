#pragma once

#include <vector>

#include "rnls/grid.hpp"

namespace rnls {

/// Stability threshold constants, evaluated from their closed forms.
struct ThresholdConstants {
  double eps0;  // (5/8)^{1/4}
  double mu0;   // sqrt(sqrt5 / (sqrt8 + 2 sqrt5))
  double mu1;   // 1/sqrt2, upper end of the admissible mu range

  static const ThresholdConstants& get();
};

/// Regularization strength in both parametrizations.
struct ModelParams {
  double mu;
  double eps;

  static ModelParams from_mu(double mu);
  static ModelParams from_eps(double eps);
};

/// mu in [0, 1/sqrt2) -> eps = mu / sqrt(1 - 2 mu^2).
double mu_to_eps(double mu);
/// eps >= 0 -> mu = eps / sqrt(1 + 2 eps^2).
double eps_to_mu(double eps);

/// omega(k) = k^2 / (1 + mu^2 k^2), bounded by mu^-2.
double dispersion_omega(double k, double mu);

/// Travelling dark soliton of the cubic defocusing NLS,
/// [gamma tanh(gamma (x - 2ct)) + ic] e^{-2it}, gamma = sqrt(1 - c^2).
class DarkSoliton {
 public:
  /// Throws InvalidArgument unless |c| < 1.
  explicit DarkSoliton(double speed);

  double speed() const noexcept { return speed_; }
  double amplitude() const noexcept { return amplitude_; }
  cplx operator()(double t, double x) const;

 private:
  double speed_;
  double amplitude_;
};

cplx dark_soliton(double c, double t, double x);

/// tanh sampled on the grid.
ComplexField black_soliton(const Grid& grid);

/// Odd solution of the discrete stationary problem A_N phi + 2(1 - phi^2) phi = 0
/// on the grid, found by Newton iteration in the odd subspace starting from tanh.
/// Differs from sampled tanh by O(h^2).
std::vector<double> stationary_black_soliton(const Grid& grid);

/// Even bounded solution of L_- V = (1 - eps^2 d^2) phi':
/// V(xi) = -(1 + 2 eps^2)/2 + (3/2) eps^2 sech^2(xi).
double v_phi_profile(double eps, double xi);

/// Closed form of (phi', V_phi)_eps = -1 + (8/5) eps^4.
double pairing_phi_vphi(double eps);

/// Root of pairing_phi_vphi located by bracketing on [0, 2].
double pairing_root();

}  // namespace rnls
