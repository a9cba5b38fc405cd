#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "rnls/grid.hpp"

namespace rnls {

enum class Scheme { linear, nonlinear };

/// Discretization parameters of one time integration.
struct SchemeConfig {
  explicit SchemeConfig(const Grid& g) : grid(g), tau(g.spacing()) {}

  Grid grid;
  double eps = 0.5;
  double tau;  // defaults to h
  double t_final = 5.0;
  double amp = 0.01;
  Scheme scheme = Scheme::nonlinear;
  int snapshot_stride = 1;
  double blowup_ceiling = 10.0;

  /// Throws InvalidArgument on eps < 0, tau <= 0, t_final < tau, stride < 1.
  void validate() const;
  long step_count() const;
};

/// Named parameter sets of the reference runs: "fig1" and "fig2" (linear
/// scheme, eps = 0.5, L = 10, K = 200, t in [0, 5]); "fig3", "fig4", "fig5"
/// (nonlinear scheme, L = 20, K = 400, a = 0.01 at eps = 0.5, 1, 0).
std::optional<SchemeConfig> preset(std::string_view name);

struct Trajectory {
  SchemeConfig config;
  std::vector<double> times;
  std::vector<ComplexField> fields;
  // One entry per step, including t = 0.
  std::vector<double> step_times;
  std::vector<double> max_imag;
  std::vector<double> max_abs;
};

/// u0_k = tanh(xi_k) + i a sech^2(xi_k).
ComplexField initial_condition(const Grid& grid, double amp);

/// h * sum_k w_k conj(u_k) [(1 - eps^2 A_N) u]_k; invariant of the linear step.
double weighted_norm(const ComplexField& u, double eps);

/// One Crank-Nicolson step of the linear problem,
/// (1 - eps^2 A - i tau/2 A) u+ = (1 - eps^2 A + i tau/2 A) u.
ComplexField step_linear(const ComplexField& u, const SchemeConfig& cfg);

/// One step of the nonlinear scheme: a predictor with the nonlinear
/// coefficient frozen at |u^m|^2, then a Heun corrector that repeats the
/// Crank-Nicolson solve with the coefficient (|u^m|^2 + |u~|^2) / 2 on both sides.
/// Throws NumericalFailure(blow_up) if max|u| exceeds cfg.blowup_ceiling.
ComplexField step_nonlinear(const ComplexField& u, const SchemeConfig& cfg);

/// Reusable stepper; the linear scheme factors its matrix once.
class Stepper {
 public:
  explicit Stepper(const SchemeConfig& cfg);
  ComplexField advance(const ComplexField& u) const;

 private:
  ComplexField advance_linear(const ComplexField& u) const;
  ComplexField advance_nonlinear(const ComplexField& u) const;
  std::vector<cplx> explicit_half(const ComplexField& u, std::span<const double> coeff) const;

  SchemeConfig cfg_;
  BandedOperator laplacian_;
  std::optional<TridiagonalLU<cplx>> linear_lu_;
};

using StepObserver =
    std::function<void(long step, double t, const ComplexField& before, const ComplexField& after)>;

/// Integrates from initial_condition(grid, amp), or from `initial` when given,
/// to t_final. Snapshots every snapshot_stride steps plus the final step.
/// Failures are rethrown as NumericalFailure carrying the step index and time.
Trajectory run(const SchemeConfig& cfg, const std::optional<ComplexField>& initial = std::nullopt,
               const StepObserver& observer = {});

}  // namespace rnls
