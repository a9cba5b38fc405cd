#pragma once

#include <span>
#include <vector>

#include "rnls/evolve.hpp"
#include "rnls/grid.hpp"

namespace rnls {

// Quadrature is the trapezoid rule on the grid. |u_xi|^2 is integrated from
// edge differences, h sum |u_{k+1} - u_k|^2 / h^2, which equals
// -h sum w_k conj(u_k) (A_N u)_k; this is the discrete Hamiltonian of the
// semi-discrete system, so energy drift measures time-stepping error only.
// The momentum uses node-centred differences (one-sided at the walls) for
// u_xi and A_N for u_xixi.

/// E(u) = int |u_xi|^2 + (1 - |u|^2)^2.
double energy(const ComplexField& u);

/// P(u) = i int (conj(u) u_xi - conj(u_xi) u) + eps^2 (conj(u_xi) u_xixi - conj(u_xixi) u_xi).
/// Throws NumericalFailure(discretization) if the assembled sum has an
/// imaginary part above 1e-8.
double momentum(const ComplexField& u, double eps);

/// M(u) = int eps^2 |u_xi|^2 + |u|^2 - 1.
double mass(const ComplexField& u, double eps);

struct PerturbationFunctionals {
  double energy;
  double momentum;
  double mass;
};

/// E^, P^, M^ of a perturbation v about the real background phi. With phi the
/// discrete stationary soliton and v vanishing near the walls,
/// E(phi + v) = E(phi) + E^(v) (and likewise for P, M) holds to roundoff.
PerturbationFunctionals conserved_perturbation(const ComplexField& v, double eps,
                                               std::span<const double> background);
/// Same, about stationary_black_soliton(v.grid()).
PerturbationFunctionals conserved_perturbation(const ComplexField& v, double eps);

/// Momentum flux through the Neumann walls over one step, evaluated at the
/// step midpoint: dP/dt = -2 [(1 - |u|^2)^2 + Im(conj(u) u_t)] from -L to L.
double wall_momentum_flux(const ComplexField& before, const ComplexField& after, double tau);

struct ConservedLog {
  std::vector<double> times;
  std::vector<double> energy;
  std::vector<double> momentum;
  std::vector<double> mass;
  // Accumulated integral of the wall momentum flux (zero when logged from snapshots).
  std::vector<double> wall_flux;

  static double drift(const std::vector<double>& series, std::size_t i) {
    return series[i] - series.front();
  }
  /// max_t |X(t) - X(0)| / |X(0)|.
  static double max_relative_drift(const std::vector<double>& series);
  /// max_t |P(t) - P(0) - int_0^t flux| / |P(0)|.
  double max_momentum_balance_residual() const;
  double max_abs_wall_flux() const;
};

/// Records E, P, M every step. Pass observer() to run().
class ConservationMonitor {
 public:
  ConservationMonitor(double eps, const ComplexField& initial);

  StepObserver observer();
  const ConservedLog& log() const noexcept { return log_; }

 private:
  void record(double t, const ComplexField& u, double flux_increment);

  double eps_;
  ConservedLog log_;
};

/// E, P, M at every stored snapshot of a trajectory.
ConservedLog conserved_log(const Trajectory& traj);

}  // namespace rnls
