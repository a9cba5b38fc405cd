#include "rnls/evolve.hpp"

#include <cmath>
#include <string>

namespace rnls {

namespace {

constexpr cplx kI(0.0, 1.0);

}  // namespace

void SchemeConfig::validate() const {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw InvalidArgument("scheme: eps must be finite and non-negative");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) throw InvalidArgument("scheme: tau must be positive");
  if (!(t_final >= tau)) throw InvalidArgument("scheme: t_final must be at least tau");
  if (snapshot_stride < 1) throw InvalidArgument("scheme: snapshot stride must be >= 1");
  if (!(blowup_ceiling > 0.0)) throw InvalidArgument("scheme: blow-up ceiling must be positive");
  if (!std::isfinite(amp)) throw InvalidArgument("scheme: amplitude must be finite");
}

long SchemeConfig::step_count() const { return std::lround(t_final / tau); }

std::optional<SchemeConfig> preset(std::string_view name) {
  if (name == "fig1" || name == "fig2") {
    SchemeConfig cfg(Grid::create(10.0, 200));
    cfg.eps = 0.5;
    cfg.t_final = 5.0;
    cfg.amp = 0.0;
    cfg.scheme = Scheme::linear;
    return cfg;
  }
  if (name == "fig3" || name == "fig4" || name == "fig5") {
    SchemeConfig cfg(Grid::create(20.0, 400));
    cfg.amp = 0.01;
    cfg.scheme = Scheme::nonlinear;
    cfg.eps = name == "fig3" ? 0.5 : (name == "fig4" ? 1.0 : 0.0);
    cfg.t_final = name == "fig4" ? 10.0 : 50.0;
    cfg.snapshot_stride = 10;
    return cfg;
  }
  return std::nullopt;
}

ComplexField initial_condition(const Grid& grid, double amp) {
  std::vector<cplx> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double x = grid.node(i);
    const double s = 1.0 / std::cosh(x);
    v[i] = cplx(std::tanh(x), amp * s * s);
  }
  return ComplexField(grid, std::move(v));
}

double weighted_norm(const ComplexField& u, double eps) {
  const auto a = build_neumann_laplacian(u.grid());
  const auto bu = combine_real(1.0, -eps * eps, a).apply(u.values());
  return weighted_inner(u.grid(), u.values(), bu).real();
}

Stepper::Stepper(const SchemeConfig& cfg)
    : cfg_(cfg), laplacian_(build_neumann_laplacian(cfg.grid)) {
  cfg_.validate();
  if (cfg_.scheme == Scheme::linear) {
    const cplx c1 = -cfg_.eps * cfg_.eps - 0.5 * kI * cfg_.tau;
    linear_lu_.emplace(combine(1.0, c1, laplacian_));
  }
}

ComplexField Stepper::advance(const ComplexField& u) const {
  if (!(u.grid() == cfg_.grid)) throw ParameterMismatch("stepper: field on a different grid");
  ComplexField next =
      cfg_.scheme == Scheme::linear ? advance_linear(u) : advance_nonlinear(u);
  const double peak = next.max_abs();
  if (peak > cfg_.blowup_ceiling) {
    throw NumericalFailure(NumericalFailure::Kind::blow_up,
                           "max|u| = " + std::to_string(peak) + " exceeds ceiling " +
                               std::to_string(cfg_.blowup_ceiling));
  }
  return next;
}

// (1 - eps^2 A + i tau/2 A + i tau (1 - g)) u
std::vector<cplx> Stepper::explicit_half(const ComplexField& u,
                                         std::span<const double> coeff) const {
  const auto au = laplacian_.apply(u.values());
  const cplx c1 = -cfg_.eps * cfg_.eps + 0.5 * kI * cfg_.tau;
  std::vector<cplx> rhs(u.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    rhs[i] = u[i] + c1 * au[i];
    if (!coeff.empty()) rhs[i] += kI * cfg_.tau * (1.0 - coeff[i]) * u[i];
  }
  return rhs;
}

ComplexField Stepper::advance_linear(const ComplexField& u) const {
  auto rhs = explicit_half(u, {});
  linear_lu_->solve_in_place(rhs);
  return ComplexField(u.grid(), std::move(rhs));
}

ComplexField Stepper::advance_nonlinear(const ComplexField& u) const {
  const std::size_t n = u.size();
  const cplx c1 = -cfg_.eps * cfg_.eps - 0.5 * kI * cfg_.tau;

  auto implicit_solve = [&](std::span<const double> g) {
    std::vector<cplx> pot(n);
    for (std::size_t i = 0; i < n; ++i) pot[i] = -kI * cfg_.tau * (1.0 - g[i]);
    auto x = explicit_half(u, g);
    TridiagonalLU<cplx>(combine(1.0, c1, laplacian_, pot)).solve_in_place(x);
    return x;
  };

  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = std::norm(u[i]);
  const auto predicted = implicit_solve(g);
  for (std::size_t i = 0; i < n; ++i) g[i] = 0.5 * (g[i] + std::norm(predicted[i]));
  return ComplexField(u.grid(), implicit_solve(g));
}

ComplexField step_linear(const ComplexField& u, const SchemeConfig& cfg) {
  SchemeConfig c = cfg;
  c.scheme = Scheme::linear;
  return Stepper(c).advance(u);
}

ComplexField step_nonlinear(const ComplexField& u, const SchemeConfig& cfg) {
  SchemeConfig c = cfg;
  c.scheme = Scheme::nonlinear;
  return Stepper(c).advance(u);
}

Trajectory run(const SchemeConfig& cfg, const std::optional<ComplexField>& initial,
               const StepObserver& observer) {
  cfg.validate();
  const Stepper stepper(cfg);
  ComplexField u = initial ? *initial : initial_condition(cfg.grid, cfg.amp);
  if (!(u.grid() == cfg.grid)) throw ParameterMismatch("run: initial field on a different grid");

  const long steps = cfg.step_count();
  Trajectory traj{cfg, {}, {}, {}, {}, {}};
  traj.times.reserve(static_cast<std::size_t>(steps / cfg.snapshot_stride + 2));
  traj.step_times.reserve(static_cast<std::size_t>(steps + 1));

  auto record_diagnostics = [&](double t, const ComplexField& f) {
    traj.step_times.push_back(t);
    traj.max_imag.push_back(f.max_abs_imag());
    traj.max_abs.push_back(f.max_abs());
  };
  traj.times.push_back(0.0);
  traj.fields.push_back(u);
  record_diagnostics(0.0, u);

  for (long m = 1; m <= steps; ++m) {
    const double t = static_cast<double>(m) * cfg.tau;
    std::optional<ComplexField> next;
    try {
      next.emplace(stepper.advance(u));
    } catch (const NumericalFailure& e) {
      throw e.at_step(m, t);
    }
    if (observer) observer(m, t, u, *next);
    u = std::move(*next);
    record_diagnostics(t, u);
    if (m % cfg.snapshot_stride == 0 || m == steps) {
      traj.times.push_back(t);
      traj.fields.push_back(u);
    }
  }
  return traj;
}

}  // namespace rnls
