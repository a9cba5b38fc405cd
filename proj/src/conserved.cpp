#include "rnls/conserved.hpp"

#include <cmath>
#include <string>

#include "rnls/soliton.hpp"

namespace rnls {

namespace {

constexpr cplx kI(0.0, 1.0);

// Node-centred first difference, one-sided at the two walls.
std::vector<cplx> centered_difference(const Grid& grid, std::span<const cplx> u) {
  const std::size_t n = u.size();
  const double h = grid.spacing();
  std::vector<cplx> d(n);
  d[0] = (u[1] - u[0]) / h;
  d[n - 1] = (u[n - 1] - u[n - 2]) / h;
  for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (u[i + 1] - u[i - 1]) / (2.0 * h);
  return d;
}

double edge_gradient_norm(const Grid& grid, std::span<const cplx> u) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) s += std::norm(u[i + 1] - u[i]);
  return s / grid.spacing();
}

template <class F>
double trapezoid(const Grid& grid, F&& integrand) {
  double s = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) s += grid.weight(i) * integrand(i);
  return s * grid.spacing();
}

template <class F>
cplx trapezoid_complex(const Grid& grid, F&& integrand) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) s += grid.weight(i) * integrand(i);
  return s * grid.spacing();
}

double checked_real(cplx value, const char* what) {
  if (std::abs(value.imag()) > 1e-8) {
    throw NumericalFailure(NumericalFailure::Kind::discretization,
                           std::string(what) + ": imaginary residual " +
                               std::to_string(value.imag()) + " exceeds 1e-8");
  }
  return value.real();
}

}  // namespace

double energy(const ComplexField& u) {
  const Grid& g = u.grid();
  const auto v = u.values();
  return edge_gradient_norm(g, v) + trapezoid(g, [&](std::size_t i) {
           const double d = 1.0 - std::norm(v[i]);
           return d * d;
         });
}

double momentum(const ComplexField& u, double eps) {
  const Grid& g = u.grid();
  const auto v = u.values();
  const auto du = centered_difference(g, v);
  const auto d2u = build_neumann_laplacian(g).apply(v);
  const double e2 = eps * eps;
  const cplx p = kI * trapezoid_complex(g, [&](std::size_t i) {
                   return (std::conj(v[i]) * du[i] - std::conj(du[i]) * v[i]) +
                          e2 * (std::conj(du[i]) * d2u[i] - std::conj(d2u[i]) * du[i]);
                 });
  return checked_real(p, "momentum");
}

double mass(const ComplexField& u, double eps) {
  const Grid& g = u.grid();
  const auto v = u.values();
  return eps * eps * edge_gradient_norm(g, v) +
         trapezoid(g, [&](std::size_t i) { return std::norm(v[i]) - 1.0; });
}

PerturbationFunctionals conserved_perturbation(const ComplexField& v, double eps,
                                               std::span<const double> background) {
  const Grid& g = v.grid();
  if (background.size() != g.size()) {
    throw InvalidArgument("conserved_perturbation: background length mismatch");
  }
  const auto w = v.values();
  const double e2 = eps * eps;
  const auto a = build_neumann_laplacian(g);
  const std::vector<cplx> phi(background.begin(), background.end());
  const auto dphi = centered_difference(g, phi);
  const auto d2phi = a.apply(std::span<const double>(background));
  const auto dv = centered_difference(g, w);
  const auto d2v = a.apply(w);

  PerturbationFunctionals out{};
  out.energy = edge_gradient_norm(g, w) + trapezoid(g, [&](std::size_t i) {
                 const double p = background[i];
                 const double m2 = std::norm(w[i]);
                 const double re2 = 2.0 * w[i].real();  // v + conj(v)
                 const double sq = 2.0 * (w[i] * w[i]).real();  // v^2 + conj(v)^2
                 return -2.0 * (1.0 - 2.0 * p * p) * m2 + p * p * sq + 2.0 * p * m2 * re2 +
                        m2 * m2;
               });
  const cplx p_hat = kI * trapezoid_complex(g, [&](std::size_t i) {
                       const cplx vb = std::conj(w[i]);
                       const cplx dvb = std::conj(dv[i]);
                       return 2.0 * dphi[i].real() * (vb - w[i]) + (vb * dv[i] - dvb * w[i]) +
                              2.0 * e2 * d2phi[i] * (dvb - dv[i]) +
                              e2 * (dvb * d2v[i] - std::conj(d2v[i]) * dv[i]);
                     });
  out.momentum = checked_real(p_hat, "momentum perturbation");
  out.mass = e2 * edge_gradient_norm(g, w) + trapezoid(g, [&](std::size_t i) {
               return (background[i] - e2 * d2phi[i]) * 2.0 * w[i].real() + std::norm(w[i]);
             });
  return out;
}

PerturbationFunctionals conserved_perturbation(const ComplexField& v, double eps) {
  const auto phi = stationary_black_soliton(v.grid());
  return conserved_perturbation(v, eps, phi);
}

double wall_momentum_flux(const ComplexField& before, const ComplexField& after, double tau) {
  if (!(before.grid() == after.grid())) {
    throw ParameterMismatch("wall flux: fields on different grids");
  }
  auto density = [&](std::size_t i) {
    const cplx mid = 0.5 * (before[i] + after[i]);
    const cplx rate = (after[i] - before[i]) / tau;
    const double d = 1.0 - std::norm(mid);
    return d * d + (std::conj(mid) * rate).imag();
  };
  const std::size_t last = before.size() - 1;
  return -2.0 * (density(last) - density(0));
}

double ConservedLog::max_relative_drift(const std::vector<double>& series) {
  if (series.empty()) return 0.0;
  const double ref = std::abs(series.front());
  double m = 0.0;
  for (double x : series) m = std::max(m, std::abs(x - series.front()));
  return ref > 0.0 ? m / ref : m;
}

double ConservedLog::max_momentum_balance_residual() const {
  if (momentum.empty()) return 0.0;
  const double ref = std::abs(momentum.front());
  double m = 0.0;
  for (std::size_t i = 0; i < momentum.size(); ++i) {
    m = std::max(m, std::abs(momentum[i] - momentum.front() - wall_flux[i]));
  }
  return ref > 0.0 ? m / ref : m;
}

double ConservedLog::max_abs_wall_flux() const {
  double m = 0.0;
  for (double f : wall_flux) m = std::max(m, std::abs(f));
  return m;
}

ConservationMonitor::ConservationMonitor(double eps, const ComplexField& initial) : eps_(eps) {
  record(0.0, initial, 0.0);
}

void ConservationMonitor::record(double t, const ComplexField& u, double flux_increment) {
  const double accumulated = log_.wall_flux.empty() ? 0.0 : log_.wall_flux.back();
  log_.times.push_back(t);
  log_.energy.push_back(energy(u));
  log_.momentum.push_back(momentum(u, eps_));
  log_.mass.push_back(mass(u, eps_));
  log_.wall_flux.push_back(accumulated + flux_increment);
}

StepObserver ConservationMonitor::observer() {
  return [this](long, double t, const ComplexField& before, const ComplexField& after) {
    const double tau = t - log_.times.back();
    record(t, after, tau * wall_momentum_flux(before, after, tau));
  };
}

ConservedLog conserved_log(const Trajectory& traj) {
  ConservedLog log;
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    log.times.push_back(traj.times[s]);
    log.energy.push_back(energy(traj.fields[s]));
    log.momentum.push_back(momentum(traj.fields[s], traj.config.eps));
    log.mass.push_back(mass(traj.fields[s], traj.config.eps));
    log.wall_flux.push_back(0.0);
  }
  return log;
}

}  // namespace rnls
