#include "rnls/rnls.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <new>
#include <optional>
#include <string>

#include "rnls/conserved.hpp"
#include "rnls/evolve.hpp"
#include "rnls/oracle.hpp"
#include "rnls/soliton.hpp"
#include "rnls/spectral.hpp"

#ifndef RNLS_VERSION
#define RNLS_VERSION "0.0.0"
#endif

struct rnls_trajectory {
  rnls::Trajectory traj;
  rnls::ConservedLog conserved;
};

struct rnls_fourier {
  rnls::FourierSolution solution;
};

struct rnls_spectrum {
  rnls::SpectralReport report;
};

struct rnls_threshold {
  rnls::ThresholdResult result;
};

namespace {

struct LastError {
  std::string message;
  long step = -1;
  double time = std::numeric_limits<double>::quiet_NaN();
};

thread_local LastError last_error;

rnls_status fail(rnls_status s, const std::string& message) {
  last_error.message = message;
  last_error.step = -1;
  last_error.time = std::numeric_limits<double>::quiet_NaN();
  return s;
}

rnls_status from_kind(rnls::NumericalFailure::Kind kind) {
  using K = rnls::NumericalFailure::Kind;
  switch (kind) {
    case K::singular: return RNLS_ERR_SINGULAR;
    case K::blow_up: return RNLS_ERR_BLOW_UP;
    case K::non_finite: return RNLS_ERR_NON_FINITE;
    case K::eigensolver: return RNLS_ERR_EIGENSOLVER;
    case K::quadrature: return RNLS_ERR_QUADRATURE;
    case K::discretization: return RNLS_ERR_DISCRETIZATION;
  }
  return RNLS_ERR_INTERNAL;
}

template <class F>
rnls_status guarded(F&& body) {
  try {
    body();
    last_error = LastError{};
    return RNLS_OK;
  } catch (const rnls::NumericalFailure& e) {
    const rnls_status s = fail(from_kind(e.kind()), e.what());
    last_error.step = e.step();
    last_error.time = e.time();
    return s;
  } catch (const rnls::InvalidArgument& e) {
    return fail(RNLS_ERR_INVALID_ARGUMENT, e.what());
  } catch (const rnls::ParameterMismatch& e) {
    return fail(RNLS_ERR_PARAMETER_MISMATCH, e.what());
  } catch (const rnls::IoError& e) {
    return fail(RNLS_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RNLS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RNLS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RNLS_ERR_INTERNAL, "unknown exception");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw rnls::InvalidArgument(what);
}

rnls::SchemeConfig to_config(const rnls_run_config& c) {
  rnls::SchemeConfig cfg(rnls::Grid::create(c.half_length, c.half_count));
  cfg.eps = c.eps;
  if (c.tau > 0.0) cfg.tau = c.tau;
  cfg.t_final = c.t_final;
  cfg.amp = c.amp;
  require(c.scheme == RNLS_SCHEME_LINEAR || c.scheme == RNLS_SCHEME_NONLINEAR, "unknown scheme");
  cfg.scheme = c.scheme == RNLS_SCHEME_LINEAR ? rnls::Scheme::linear : rnls::Scheme::nonlinear;
  cfg.snapshot_stride = c.snapshot_stride;
  cfg.blowup_ceiling = c.blowup_ceiling;
  cfg.validate();
  return cfg;
}

void from_config(const rnls::SchemeConfig& cfg, rnls_run_config* c) {
  c->half_length = cfg.grid.half_length();
  c->half_count = cfg.grid.half_count();
  c->eps = cfg.eps;
  c->tau = 0.0;
  c->t_final = cfg.t_final;
  c->amp = cfg.amp;
  c->scheme = cfg.scheme == rnls::Scheme::linear ? RNLS_SCHEME_LINEAR : RNLS_SCHEME_NONLINEAR;
  c->snapshot_stride = cfg.snapshot_stride;
  c->blowup_ceiling = cfg.blowup_ceiling;
  c->monitor_conserved = 0;
}

rnls_verdict to_c(rnls::Verdict v) { return v == rnls::Verdict::stable ? RNLS_STABLE : RNLS_UNSTABLE; }

rnls_parity to_c(rnls::Parity p) {
  switch (p) {
    case rnls::Parity::even: return RNLS_PARITY_EVEN;
    case rnls::Parity::odd: return RNLS_PARITY_ODD;
    default: return RNLS_PARITY_MIXED;
  }
}

rnls_bisection_step to_c(const rnls::BisectionStep& s) {
  return rnls_bisection_step{s.iteration, s.lo, s.hi, s.mid, to_c(s.verdict), s.max_real};
}

}  // namespace

extern "C" {

int rnls_status_is_numerical(rnls_status s) {
  return s == RNLS_ERR_SINGULAR || s == RNLS_ERR_BLOW_UP || s == RNLS_ERR_NON_FINITE ||
         s == RNLS_ERR_EIGENSOLVER || s == RNLS_ERR_QUADRATURE || s == RNLS_ERR_DISCRETIZATION;
}

const char* rnls_status_string(rnls_status s) {
  switch (s) {
    case RNLS_OK: return "ok";
    case RNLS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RNLS_ERR_PARAMETER_MISMATCH: return "parameter mismatch";
    case RNLS_ERR_IO: return "i/o error";
    case RNLS_ERR_SINGULAR: return "singular system";
    case RNLS_ERR_BLOW_UP: return "blow-up";
    case RNLS_ERR_NON_FINITE: return "non-finite value";
    case RNLS_ERR_EIGENSOLVER: return "eigensolver failure";
    case RNLS_ERR_QUADRATURE: return "quadrature failure";
    case RNLS_ERR_DISCRETIZATION: return "discretization fault";
    case RNLS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rnls_last_error(void) { return last_error.message.c_str(); }

void rnls_last_failure(long* step, double* time) {
  if (step) *step = last_error.step;
  if (time) *time = last_error.time;
}

const char* rnls_version(void) { return RNLS_VERSION; }

void rnls_threshold_constants(double* eps0, double* mu0, double* mu1) {
  const auto& c = rnls::ThresholdConstants::get();
  if (eps0) *eps0 = c.eps0;
  if (mu0) *mu0 = c.mu0;
  if (mu1) *mu1 = c.mu1;
}

rnls_status rnls_mu_to_eps(double mu, double* eps) {
  return guarded([&] {
    require(eps, "null output");
    *eps = rnls::mu_to_eps(mu);
  });
}

rnls_status rnls_eps_to_mu(double eps, double* mu) {
  return guarded([&] {
    require(mu, "null output");
    *mu = rnls::eps_to_mu(eps);
  });
}

double rnls_pairing(double eps) { return rnls::pairing_phi_vphi(eps); }

rnls_status rnls_pairing_root(double* root) {
  return guarded([&] {
    require(root, "null output");
    *root = rnls::pairing_root();
  });
}

void rnls_run_config_default(rnls_run_config* cfg) {
  if (!cfg) return;
  from_config(rnls::SchemeConfig(rnls::Grid::create(20.0, 400)), cfg);
}

rnls_status rnls_run_config_preset(const char* name, rnls_run_config* cfg) {
  return guarded([&] {
    require(name && cfg, "null argument");
    const auto p = rnls::preset(name);
    if (!p) throw rnls::InvalidArgument(std::string("unknown preset '") + name + "'");
    from_config(*p, cfg);
  });
}

rnls_status rnls_simulate(const rnls_run_config* c, rnls_trajectory** out) {
  return guarded([&] {
    require(c && out, "null argument");
    *out = nullptr;
    const auto cfg = to_config(*c);
    const auto u0 = rnls::initial_condition(cfg.grid, cfg.amp);
    std::optional<rnls::ConservationMonitor> monitor;
    if (c->monitor_conserved) monitor.emplace(cfg.eps, u0);
    auto traj = rnls::run(cfg, u0, monitor ? monitor->observer() : rnls::StepObserver{});
    auto log = monitor ? monitor->log() : rnls::conserved_log(traj);
    *out = new rnls_trajectory{std::move(traj), std::move(log)};
  });
}

void rnls_trajectory_free(rnls_trajectory* traj) { delete traj; }

size_t rnls_trajectory_node_count(const rnls_trajectory* t) {
  return t ? t->traj.config.grid.size() : 0;
}

size_t rnls_trajectory_snapshot_count(const rnls_trajectory* t) {
  return t ? t->traj.times.size() : 0;
}

size_t rnls_trajectory_step_count(const rnls_trajectory* t) {
  return t ? t->traj.step_times.size() : 0;
}

double rnls_trajectory_tau(const rnls_trajectory* t) {
  return t ? t->traj.config.tau : std::numeric_limits<double>::quiet_NaN();
}

rnls_status rnls_trajectory_nodes(const rnls_trajectory* t, double* xi) {
  return guarded([&] {
    require(t && xi, "null argument");
    const auto nodes = t->traj.config.grid.nodes();
    std::copy(nodes.begin(), nodes.end(), xi);
  });
}

rnls_status rnls_trajectory_snapshot(const rnls_trajectory* t, size_t index, double* time,
                                     double* re, double* im) {
  return guarded([&] {
    require(t, "null trajectory");
    require(index < t->traj.times.size(), "snapshot index out of range");
    if (time) *time = t->traj.times[index];
    const auto& f = t->traj.fields[index];
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (re) re[i] = f[i].real();
      if (im) im[i] = f[i].imag();
    }
  });
}

rnls_status rnls_trajectory_diagnostics(const rnls_trajectory* t, double* time, double* max_imag,
                                        double* max_abs) {
  return guarded([&] {
    require(t, "null trajectory");
    const auto& tr = t->traj;
    if (time) std::copy(tr.step_times.begin(), tr.step_times.end(), time);
    if (max_imag) std::copy(tr.max_imag.begin(), tr.max_imag.end(), max_imag);
    if (max_abs) std::copy(tr.max_abs.begin(), tr.max_abs.end(), max_abs);
  });
}

size_t rnls_trajectory_conserved_count(const rnls_trajectory* t) {
  return t ? t->conserved.times.size() : 0;
}

rnls_status rnls_trajectory_conserved(const rnls_trajectory* t, double* time, double* energy,
                                      double* momentum, double* mass, double* wall_flux) {
  return guarded([&] {
    require(t, "null trajectory");
    const auto& c = t->conserved;
    if (time) std::copy(c.times.begin(), c.times.end(), time);
    if (energy) std::copy(c.energy.begin(), c.energy.end(), energy);
    if (momentum) std::copy(c.momentum.begin(), c.momentum.end(), momentum);
    if (mass) std::copy(c.mass.begin(), c.mass.end(), mass);
    if (wall_flux) std::copy(c.wall_flux.begin(), c.wall_flux.end(), wall_flux);
  });
}

rnls_status rnls_trajectory_conserved_summary(const rnls_trajectory* t,
                                              rnls_conserved_summary* out) {
  return guarded([&] {
    require(t && out, "null argument");
    const auto& c = t->conserved;
    out->energy_drift = rnls::ConservedLog::max_relative_drift(c.energy);
    out->momentum_drift = rnls::ConservedLog::max_relative_drift(c.momentum);
    out->mass_drift = rnls::ConservedLog::max_relative_drift(c.mass);
    out->momentum_balance_residual = c.max_momentum_balance_residual();
  });
}

rnls_status rnls_fourier_create(double half_length, double eps, int n_max, rnls_fourier** out) {
  return guarded([&] {
    require(out, "null output");
    *out = nullptr;
    *out = new rnls_fourier{rnls::FourierSolution::compute(half_length, eps, n_max)};
  });
}

void rnls_fourier_free(rnls_fourier* f) { delete f; }

int rnls_fourier_n_max(const rnls_fourier* f) { return f ? f->solution.n_max() : -1; }

rnls_status rnls_fourier_coefficients(const rnls_fourier* f, double* a) {
  return guarded([&] {
    require(f && a, "null argument");
    const auto& c = f->solution.coefficients();
    std::copy(c.begin(), c.end(), a);
  });
}

double rnls_fourier_tail(const rnls_fourier* f) {
  return f ? f->solution.tail_magnitude() : std::numeric_limits<double>::quiet_NaN();
}

rnls_status rnls_fourier_evaluate(const rnls_fourier* f, double t, int half_count, double* re,
                                  double* im) {
  return guarded([&] {
    require(f, "null oracle");
    const auto grid = rnls::Grid::create(f->solution.half_length(), half_count);
    const auto u = f->solution.evaluate(t, grid);
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (re) re[i] = u[i].real();
      if (im) im[i] = u[i].imag();
    }
  });
}

rnls_status rnls_fourier_error(const rnls_fourier* f, const rnls_trajectory* traj, double* t,
                               double* error) {
  return guarded([&] {
    require(f && traj, "null argument");
    const auto samples = rnls::error_function(traj->traj, f->solution);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (t) t[i] = samples[i].t;
      if (error) error[i] = samples[i].error;
    }
  });
}

rnls_status rnls_spectrum_solve(double eps, double half_length, int half_count,
                                rnls_background background, double tol_unstable,
                                rnls_spectrum** out) {
  return guarded([&] {
    require(out, "null output");
    *out = nullptr;
    require(background == RNLS_BACKGROUND_DISCRETE_STATIONARY ||
                background == RNLS_BACKGROUND_SAMPLED_TANH,
            "unknown background");
    require(tol_unstable > 0.0, "tol_unstable must be positive");
    const auto grid = rnls::Grid::create(half_length, half_count);
    const auto bg = background == RNLS_BACKGROUND_SAMPLED_TANH ? rnls::Background::sampled_tanh
                                                               : rnls::Background::discrete_stationary;
    *out = new rnls_spectrum{rnls::solve_pencil(rnls::assemble_pencil(eps, grid, bg), tol_unstable)};
  });
}

void rnls_spectrum_free(rnls_spectrum* s) { delete s; }

size_t rnls_spectrum_count(const rnls_spectrum* s) { return s ? s->report.eigenvalues.size() : 0; }

rnls_status rnls_spectrum_eigenvalues(const rnls_spectrum* s, double* re, double* im) {
  return guarded([&] {
    require(s, "null spectrum");
    const auto& ev = s->report.eigenvalues;
    for (std::size_t i = 0; i < ev.size(); ++i) {
      if (re) re[i] = ev[i].real();
      if (im) im[i] = ev[i].imag();
    }
  });
}

rnls_status rnls_spectrum_get_summary(const rnls_spectrum* s, rnls_spectrum_summary* out) {
  return guarded([&] {
    require(s && out, "null argument");
    const auto& r = s->report;
    *out = rnls_spectrum_summary{r.eps,
                                 r.max_real,
                                 to_c(r.verdict),
                                 r.dominant.real(),
                                 r.dominant.imag(),
                                 r.symmetry_deviation,
                                 to_c(r.parity_u),
                                 to_c(r.parity_v),
                                 r.tol_unstable};
  });
}

rnls_status rnls_spectrum_dominant_vector(const rnls_spectrum* s, double* u_re, double* u_im,
                                          double* v_re, double* v_im) {
  return guarded([&] {
    require(s, "null spectrum");
    const auto& r = s->report;
    for (std::size_t i = 0; i < r.dominant_u.size(); ++i) {
      if (u_re) u_re[i] = r.dominant_u[i].real();
      if (u_im) u_im[i] = r.dominant_u[i].imag();
      if (v_re) v_re[i] = r.dominant_v[i].real();
      if (v_im) v_im[i] = r.dominant_v[i].imag();
    }
  });
}

rnls_status rnls_threshold_find(double half_length, int half_count, double eps_lo, double eps_hi,
                                double width, double tol_unstable,
                                rnls_bisection_callback progress, void* user,
                                rnls_threshold** out) {
  return guarded([&] {
    require(out, "null output");
    *out = nullptr;
    require(tol_unstable > 0.0, "tol_unstable must be positive");
    const auto grid = rnls::Grid::create(half_length, half_count);
    std::function<void(const rnls::BisectionStep&)> cb;
    if (progress) {
      cb = [progress, user](const rnls::BisectionStep& s) {
        const auto c = to_c(s);
        progress(&c, user);
      };
    }
    *out = new rnls_threshold{rnls::find_threshold(grid, eps_lo, eps_hi, width, tol_unstable, cb)};
  });
}

void rnls_threshold_free(rnls_threshold* t) { delete t; }

double rnls_threshold_estimate(const rnls_threshold* t) {
  return t ? t->result.estimate : std::numeric_limits<double>::quiet_NaN();
}

double rnls_threshold_closed_form(const rnls_threshold* t) {
  return t ? t->result.closed_form : std::numeric_limits<double>::quiet_NaN();
}

size_t rnls_threshold_step_count(const rnls_threshold* t) {
  return t ? t->result.trace.size() : 0;
}

rnls_status rnls_threshold_steps(const rnls_threshold* t, rnls_bisection_step* steps) {
  return guarded([&] {
    require(t && steps, "null argument");
    for (std::size_t i = 0; i < t->result.trace.size(); ++i) steps[i] = to_c(t->result.trace[i]);
  });
}

rnls_status rnls_essential_spectrum(double eps, double* lower, double* upper) {
  return guarded([&] {
    const auto s = rnls::essential_spectrum(eps);
    if (lower) *lower = s.lower;
    if (upper) *upper = s.upper;
  });
}

rnls_status rnls_lplus_spectrum(double eps, double* lower, double* upper, int* degenerate) {
  return guarded([&] {
    const auto s = rnls::lplus_continuous_spectrum(eps);
    if (lower) *lower = s.lower;
    if (upper) *upper = s.upper;
    if (degenerate) *degenerate = s.degenerate ? 1 : 0;
  });
}

rnls_status rnls_vphi_residual(double eps, double half_length, int half_count, double* residual) {
  return guarded([&] {
    require(residual, "null output");
    *residual = rnls::verify_vphi_residual(eps, rnls::Grid::create(half_length, half_count));
  });
}

rnls_status rnls_near_kernel(double half_length, int half_count, double* lplus_dphi,
                             double* lminus_phi) {
  return guarded([&] {
    const auto r = rnls::near_kernel_residuals(rnls::Grid::create(half_length, half_count));
    if (lplus_dphi) *lplus_dphi = r.lplus_dphi;
    if (lminus_phi) *lminus_phi = r.lminus_phi;
  });
}

}  // extern "C"
