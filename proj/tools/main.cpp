#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "csv.hpp"
#include "manifest.hpp"
#include "rnls/rnls.h"
#include "svg.hpp"

namespace {

using rnls_cli::Manifest;
using rnls_cli::Table;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

/// A failed library call, carrying its status.
struct CallFailure {
  rnls_status status;
  std::string message;
};

struct UsageError {
  std::string message;
};

void check(rnls_status s) {
  if (s == RNLS_OK) return;
  std::string msg = rnls_last_error();
  long step = -1;
  double t = 0.0;
  rnls_last_failure(&step, &t);
  if (step >= 0 && msg.find("(step") == std::string::npos) {
    msg += " (step " + std::to_string(step) + ", t = " + rnls_cli::format_double(t) + ")";
  }
  throw CallFailure{s, msg};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using TrajectoryPtr = std::unique_ptr<rnls_trajectory, Deleter<rnls_trajectory, rnls_trajectory_free>>;
using FourierPtr = std::unique_ptr<rnls_fourier, Deleter<rnls_fourier, rnls_fourier_free>>;
using SpectrumPtr = std::unique_ptr<rnls_spectrum, Deleter<rnls_spectrum, rnls_spectrum_free>>;
using ThresholdPtr = std::unique_ptr<rnls_threshold, Deleter<rnls_threshold, rnls_threshold_free>>;

// Flags shared by every command. Unset optionals fall back to the preset,
// then to the command default.
struct CommonFlags {
  std::optional<double> eps, L, tau, tfinal, amp;
  std::optional<int> K, nmax;
  std::string out = "rnls_out";
  std::string preset;
  std::optional<long> seed;
  bool no_plots = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--eps", f.eps, "Regularization strength eps >= 0");
  cmd->add_option("--L", f.L, "Half-length of the domain [-L, L]");
  cmd->add_option("--K", f.K, "Half node count; the grid has 2K+1 nodes");
  cmd->add_option("--tau", f.tau, "Time step (default h = L/K)");
  cmd->add_option("--tfinal", f.tfinal, "Final time");
  cmd->add_option("--amp", f.amp, "Amplitude a of the sech^2 perturbation (default 0.01)");
  cmd->add_option("--out", f.out, "Output directory")->capture_default_str();
  cmd->add_option("--preset", f.preset, "Parameter set: fig1, fig2, fig3, fig4 or fig5");
  cmd->add_option("--nmax", f.nmax, "Number of Fourier modes of the oracle");
  cmd->add_option("--seed", f.seed, "Accepted for compatibility; the pipeline is deterministic");
  cmd->add_flag("--no-plots", f.no_plots, "Skip SVG output");
}

rnls_run_config base_config(const CommonFlags& f, const rnls_run_config& fallback) {
  rnls_run_config c = fallback;
  if (!f.preset.empty()) {
    const rnls_status s = rnls_run_config_preset(f.preset.c_str(), &c);
    if (s != RNLS_OK) throw UsageError{rnls_last_error()};
  }
  if (f.eps) c.eps = *f.eps;
  if (f.L) c.half_length = *f.L;
  if (f.K) c.half_count = *f.K;
  if (f.tau) c.tau = *f.tau;
  if (f.tfinal) c.t_final = *f.tfinal;
  if (f.amp) c.amp = *f.amp;
  return c;
}

std::string prepare_out(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw CallFailure{RNLS_ERR_IO, "cannot create output directory " + dir + ": " + ec.message()};
  return dir;
}

void record_config(Manifest& m, const rnls_run_config& c, const CommonFlags& f) {
  m.param("preset", f.preset.empty() ? std::string("none") : f.preset);
  m.param("eps", c.eps);
  m.param("L", c.half_length);
  m.param("K", static_cast<long>(c.half_count));
  m.param("tau", c.tau > 0 ? c.tau : c.half_length / c.half_count);
  m.param("tfinal", c.t_final);
  m.param("amp", c.amp);
  m.param("scheme", std::string(c.scheme == RNLS_SCHEME_LINEAR ? "linear" : "nonlinear"));
  m.param("seed", std::string("unused"));
}

const char* verdict_name(rnls_verdict v) { return v == RNLS_STABLE ? "stable" : "unstable"; }

const char* parity_name(rnls_parity p) {
  return p == RNLS_PARITY_EVEN ? "even" : (p == RNLS_PARITY_ODD ? "odd" : "mixed");
}

// ---------------------------------------------------------------------------

struct SimulateFlags {
  std::string scheme;
  int stride = 0;
  double ceiling = 10.0;
};

int cmd_simulate(const CommonFlags& f, const SimulateFlags& s) {
  rnls_run_config def;
  rnls_run_config_default(&def);
  rnls_run_config c = base_config(f, def);
  if (!s.scheme.empty()) {
    if (s.scheme == "linear") c.scheme = RNLS_SCHEME_LINEAR;
    else if (s.scheme == "nonlinear") c.scheme = RNLS_SCHEME_NONLINEAR;
    else throw UsageError{"--scheme must be linear or nonlinear"};
  }
  if (s.stride > 0) c.snapshot_stride = s.stride;
  c.blowup_ceiling = s.ceiling;
  c.monitor_conserved = 1;

  const std::string out = prepare_out(f.out);
  Manifest m("simulate", out);
  record_config(m, c, f);
  m.param("snapshot_stride", static_cast<long>(c.snapshot_stride));
  m.param("blowup_ceiling", c.blowup_ceiling);

  rnls_trajectory* raw = nullptr;
  check(rnls_simulate(&c, &raw));
  TrajectoryPtr traj(raw);

  const std::size_t n = rnls_trajectory_node_count(traj.get());
  const std::size_t snaps = rnls_trajectory_snapshot_count(traj.get());
  std::vector<double> xi(n);
  check(rnls_trajectory_nodes(traj.get(), xi.data()));

  std::vector<double> st, sx, sre, sim;
  std::vector<double> snap_t(snaps);
  std::vector<std::vector<double>> re(snaps, std::vector<double>(n)), im = re;
  for (std::size_t k = 0; k < snaps; ++k) {
    check(rnls_trajectory_snapshot(traj.get(), k, &snap_t[k], re[k].data(), im[k].data()));
    for (std::size_t i = 0; i < n; ++i) {
      st.push_back(snap_t[k]);
      sx.push_back(xi[i]);
      sre.push_back(re[k][i]);
      sim.push_back(im[k][i]);
    }
  }
  rnls_cli::write_csv(m.artifact("snapshots.csv"),
                      Table().add("t", st).add("xi", sx).add("re_u", sre).add("im_u", sim));

  const std::size_t steps = rnls_trajectory_step_count(traj.get());
  std::vector<double> dt(steps), dim(steps), dabs(steps);
  check(rnls_trajectory_diagnostics(traj.get(), dt.data(), dim.data(), dabs.data()));
  rnls_cli::write_csv(m.artifact("diagnostics.csv"),
                      Table().add("t", dt).add("max_abs_im_u", dim).add("max_abs_u", dabs));

  const std::size_t nc = rnls_trajectory_conserved_count(traj.get());
  std::vector<double> ct(nc), ce(nc), cp(nc), cm(nc), cf(nc);
  check(rnls_trajectory_conserved(traj.get(), ct.data(), ce.data(), cp.data(), cm.data(), cf.data()));
  rnls_cli::write_csv(m.artifact("conserved.csv"), Table()
                                                       .add("t", ct)
                                                       .add("E", ce)
                                                       .add("P", cp)
                                                       .add("M", cm)
                                                       .add("wall_flux", cf));
  rnls_conserved_summary sum{};
  check(rnls_trajectory_conserved_summary(traj.get(), &sum));

  const double max_im = *std::max_element(dim.begin(), dim.end());
  m.result("max_abs_im_u", max_im);
  m.result("final_max_abs_u", dabs.back());
  m.result("energy_drift", sum.energy_drift);
  m.result("momentum_drift", sum.momentum_drift);
  m.result("mass_drift", sum.mass_drift);
  m.result("momentum_balance_residual", sum.momentum_balance_residual);
  m.result("wall_flux_total", cf.back());

  if (!f.no_plots) {
    rnls_cli::write_line_plot(m.artifact("profile.svg"), {"Profile", "xi", "u", false},
                              {{"Re u, t = 0", xi, re.front()},
                               {"Re u, t = " + rnls_cli::format_double(snap_t.back()), xi, re.back()},
                               {"Im u, t = " + rnls_cli::format_double(snap_t.back()), xi, im.back()}});
    rnls_cli::write_line_plot(m.artifact("max_imag.svg"), {"max |Im u|", "t", "max |Im u|", false},
                              {{"max |Im u|", dt, dim}});
    rnls_cli::write_heatmap(m.artifact("im_surface.svg"), {"Im u(t, xi)", "xi", "t", false}, xi,
                            snap_t, im);
  }
  m.write();

  std::printf("max |Im u| over [0, %g]: %.6g\n", c.t_final, max_im);
  std::printf("relative drift: E %.3e  P %.3e  M %.3e\n", sum.energy_drift, sum.momentum_drift,
              sum.mass_drift);
  std::printf("momentum balance residual after wall flux: %.3e\n", sum.momentum_balance_residual);
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_convergence(const CommonFlags& f) {
  rnls_run_config def;
  rnls_run_config_preset("fig2", &def);
  rnls_run_config coarse = base_config(f, def);
  coarse.scheme = RNLS_SCHEME_LINEAR;
  coarse.snapshot_stride = 1;
  coarse.monitor_conserved = 0;
  const double tau = coarse.tau > 0 ? coarse.tau : coarse.half_length / coarse.half_count;
  coarse.tau = tau;
  rnls_run_config fine = coarse;
  fine.half_count = 2 * coarse.half_count;
  fine.tau = tau / 2;
  fine.snapshot_stride = 2;
  const int nmax = f.nmax.value_or(2000);

  const std::string out = prepare_out(f.out);
  Manifest m("convergence", out);
  record_config(m, coarse, f);
  m.param("K_fine", static_cast<long>(fine.half_count));
  m.param("nmax", static_cast<long>(nmax));

  rnls_fourier* fr = nullptr;
  check(rnls_fourier_create(coarse.half_length, coarse.eps, nmax, &fr));
  FourierPtr oracle(fr);

  auto errors = [&](const rnls_run_config& c, std::vector<double>& t, std::vector<double>& e) {
    rnls_trajectory* raw = nullptr;
    check(rnls_simulate(&c, &raw));
    TrajectoryPtr traj(raw);
    const std::size_t k = rnls_trajectory_snapshot_count(traj.get());
    t.resize(k);
    e.resize(k);
    check(rnls_fourier_error(oracle.get(), traj.get(), t.data(), e.data()));
  };
  std::vector<double> t1, e1, t2, e2;
  errors(coarse, t1, e1);
  errors(fine, t2, e2);
  if (t1.size() != t2.size()) {
    throw CallFailure{RNLS_ERR_PARAMETER_MISMATCH, "coarse and fine runs store different times"};
  }
  std::vector<double> ratio(t1.size());
  double total = 0.0;
  long count = 0;
  for (std::size_t i = 0; i < t1.size(); ++i) {
    ratio[i] = e2[i] > 0 ? e1[i] / e2[i] : std::nan("");
    if (t1[i] > 0 && std::isfinite(ratio[i])) {
      total += ratio[i];
      ++count;
    }
  }
  const double mean = count ? total / static_cast<double>(count) : std::nan("");
  rnls_cli::write_csv(m.artifact("convergence.csv"),
                      Table().add("t", t1).add("err_K", e1).add("err_2K", e2).add("ratio", ratio));
  if (!f.no_plots) {
    rnls_cli::write_line_plot(
        m.artifact("convergence.svg"), {"Error against the Fourier solution", "t", "max error", true},
        {{"K = " + std::to_string(coarse.half_count), t1, e1},
         {"K = " + std::to_string(fine.half_count), t2, e2}});
  }
  m.result("mean_ratio", mean);
  m.result("err_K_t0", e1.front());
  m.result("err_2K_t0", e2.front());
  m.result("oracle_tail", rnls_fourier_tail(oracle.get()));
  m.write();
  std::printf("mean error ratio over (0, %g]: %.6f\n", coarse.t_final, mean);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SpectrumFlags {
  std::string background = "discrete";
  double tol = RNLS_TOL_UNSTABLE;
};

rnls_background parse_background(const std::string& b) {
  if (b == "discrete") return RNLS_BACKGROUND_DISCRETE_STATIONARY;
  if (b == "tanh") return RNLS_BACKGROUND_SAMPLED_TANH;
  throw UsageError{"--background must be discrete or tanh"};
}

int cmd_spectrum(const CommonFlags& f, const SpectrumFlags& s) {
  rnls_run_config def;
  rnls_run_config_default(&def);
  const rnls_run_config c = base_config(f, def);
  const rnls_background bg = parse_background(s.background);

  const std::string out = prepare_out(f.out);
  Manifest m("spectrum", out);
  m.param("preset", f.preset.empty() ? std::string("none") : f.preset);
  m.param("eps", c.eps);
  m.param("L", c.half_length);
  m.param("K", static_cast<long>(c.half_count));
  m.param("background", s.background);
  m.param("tol_unstable", s.tol);
  m.param("seed", std::string("unused"));

  double lo = 0, hi = 0;
  if (c.eps == 0.0) {
    std::fprintf(stderr, "warning: eps = 0, the essential spectrum is unbounded (whole imaginary axis)\n");
    m.result("essential_spectrum", std::string("unbounded"));
  } else {
    check(rnls_essential_spectrum(c.eps, &lo, &hi));
    m.result("essential_spectrum_lower_im", lo);
    m.result("essential_spectrum_upper_im", hi);
  }

  rnls_spectrum* raw = nullptr;
  check(rnls_spectrum_solve(c.eps, c.half_length, c.half_count, bg, s.tol, &raw));
  SpectrumPtr spec(raw);
  const std::size_t count = rnls_spectrum_count(spec.get());
  std::vector<double> re(count), im(count);
  check(rnls_spectrum_eigenvalues(spec.get(), re.data(), im.data()));
  rnls_spectrum_summary sum{};
  check(rnls_spectrum_get_summary(spec.get(), &sum));

  rnls_cli::write_csv(m.artifact("eigenvalues.csv"), Table().add("re", re).add("im", im));

  const std::size_t n = static_cast<std::size_t>(2 * c.half_count + 1);
  std::vector<double> ur(n), ui(n), vr(n), vi(n), xi(n);
  check(rnls_spectrum_dominant_vector(spec.get(), ur.data(), ui.data(), vr.data(), vi.data()));
  for (std::size_t i = 0; i < n; ++i) {
    xi[i] = c.half_length * (static_cast<double>(static_cast<long>(i) - c.half_count) / c.half_count);
  }
  rnls_cli::write_csv(m.artifact("dominant_mode.csv"), Table()
                                                           .add("xi", xi)
                                                           .add("re_U", ur)
                                                           .add("im_U", ui)
                                                           .add("re_V", vr)
                                                           .add("im_V", vi));
  if (!f.no_plots) {
    rnls_cli::write_scatter_plot(m.artifact("spectrum.svg"),
                                 {"Pencil eigenvalues, eps = " + rnls_cli::format_double(c.eps),
                                  "Re lambda", "Im lambda", false},
                                 {{"eigenvalues", re, im}});
  }
  m.result("verdict", std::string(verdict_name(sum.verdict)));
  m.result("max_real", sum.max_real);
  m.result("dominant_re", sum.dominant_re);
  m.result("dominant_im", sum.dominant_im);
  m.result("symmetry_deviation", sum.symmetry_deviation);
  m.result("parity_U", std::string(parity_name(sum.parity_u)));
  m.result("parity_V", std::string(parity_name(sum.parity_v)));

  const std::string report = m.artifact("report.txt");
  {
    std::FILE* fp = std::fopen(report.c_str(), "w");
    if (!fp) throw CallFailure{RNLS_ERR_IO, "cannot write " + report};
    std::fprintf(fp, "eps=%.17g\nL=%.17g\nK=%d\nverdict=%s\nmax_real=%.17g\n", c.eps,
                 c.half_length, c.half_count, verdict_name(sum.verdict), sum.max_real);
    std::fprintf(fp, "dominant=%.17g%+.17gi\ntol_unstable=%.17g\nsymmetry_deviation=%.17g\n",
                 sum.dominant_re, sum.dominant_im, sum.tol_unstable, sum.symmetry_deviation);
    std::fprintf(fp, "parity_U=%s\nparity_V=%s\n", parity_name(sum.parity_u),
                 parity_name(sum.parity_v));
    std::fclose(fp);
  }
  m.write();
  std::printf("eps = %g: spectrally %s, max Re lambda = %.6e, dominant = %.6e%+.6ei\n", c.eps,
              verdict_name(sum.verdict), sum.max_real, sum.dominant_re, sum.dominant_im);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct ThresholdFlags {
  double lo = 0.5;
  double hi = 1.2;
  double width = 1e-3;
  double tol = RNLS_TOL_UNSTABLE;
};

int cmd_threshold(const CommonFlags& f, const ThresholdFlags& t) {
  rnls_run_config def;
  rnls_run_config_default(&def);
  const rnls_run_config c = base_config(f, def);
  if (!(t.hi > t.lo)) throw UsageError{"--hi must exceed --lo"};

  const std::string out = prepare_out(f.out);
  Manifest m("threshold", out);
  m.param("L", c.half_length);
  m.param("K", static_cast<long>(c.half_count));
  m.param("lo", t.lo);
  m.param("hi", t.hi);
  m.param("width", t.width);
  m.param("tol_unstable", t.tol);
  m.param("seed", std::string("unused"));

  auto progress = [](const rnls_bisection_step* s, void*) {
    std::fprintf(stderr, "  [%2d] mid = %.6f  %s  (max Re = %.3e)\n", s->iteration, s->mid,
                 verdict_name(s->verdict), s->max_real);
  };
  rnls_threshold* raw = nullptr;
  check(rnls_threshold_find(c.half_length, c.half_count, t.lo, t.hi, t.width, t.tol, progress,
                            nullptr, &raw));
  ThresholdPtr res(raw);
  std::vector<rnls_bisection_step> steps(rnls_threshold_step_count(res.get()));
  check(rnls_threshold_steps(res.get(), steps.data()));

  std::vector<double> it, lo, hi, mid, mr;
  std::vector<std::string> verdict;
  for (const auto& s : steps) {
    it.push_back(s.iteration);
    lo.push_back(s.lo);
    hi.push_back(s.hi);
    mid.push_back(s.mid);
    verdict.emplace_back(verdict_name(s.verdict));
    mr.push_back(s.max_real);
  }
  rnls_cli::write_csv(m.artifact("threshold_trace.csv"), Table()
                                                            .add("iteration", it)
                                                            .add("lo", lo)
                                                            .add("hi", hi)
                                                            .add("mid", mid)
                                                            .add_text("verdict", verdict)
                                                            .add("max_real", mr));
  const double estimate = rnls_threshold_estimate(res.get());
  const double closed = rnls_threshold_closed_form(res.get());
  m.result("estimate", estimate);
  m.result("closed_form", closed);
  m.result("gap", estimate - closed);
  m.write();
  std::printf("threshold estimate: %.6f\n", estimate);
  std::printf("closed form (5/8)^(1/4): %.12f\n", closed);
  std::printf("gap: %+.6f\n", estimate - closed);
  return kExitOk;
}

// ---------------------------------------------------------------------------

int cmd_oracle_check(const CommonFlags& f) {
  rnls_run_config def;
  rnls_run_config_preset("fig2", &def);
  const rnls_run_config c = base_config(f, def);
  const int nmax = f.nmax.value_or(2000);
  constexpr double kReconstructionTolerance = 1e-6;

  const std::string out = prepare_out(f.out);
  Manifest m("oracle-check", out);
  m.param("L", c.half_length);
  m.param("K", static_cast<long>(c.half_count));
  m.param("eps", c.eps);
  m.param("nmax", static_cast<long>(nmax));
  m.param("seed", std::string("unused"));

  rnls_fourier* fr = nullptr;
  check(rnls_fourier_create(c.half_length, c.eps, nmax, &fr));
  FourierPtr oracle(fr);
  std::vector<double> a(static_cast<std::size_t>(nmax) + 1), idx(a.size()), mag(a.size());
  check(rnls_fourier_coefficients(oracle.get(), a.data()));
  double even_max = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    idx[n] = static_cast<double>(n);
    mag[n] = std::abs(a[n]);
    if (n % 2 == 0) even_max = std::max(even_max, mag[n]);
  }
  rnls_cli::write_csv(m.artifact("coefficients.csv"), Table().add("n", idx).add("a_n", a));

  const std::size_t nodes = static_cast<std::size_t>(2 * c.half_count + 1);
  std::vector<double> re(nodes), im(nodes);
  check(rnls_fourier_evaluate(oracle.get(), 0.0, c.half_count, re.data(), im.data()));
  double recon = 0.0;
  for (std::size_t i = 0; i < nodes; ++i) {
    const double xi =
        c.half_length * (static_cast<double>(static_cast<long>(i) - c.half_count) / c.half_count);
    recon = std::max(recon, std::hypot(re[i] - std::tanh(xi), im[i]));
  }
  if (!f.no_plots) {
    std::vector<double> odd_n, odd_a;
    for (std::size_t n = 1; n < a.size(); n += 2) {
      odd_n.push_back(idx[n]);
      odd_a.push_back(mag[n]);
    }
    rnls_cli::write_line_plot(m.artifact("coefficients.svg"),
                              {"Fourier coefficient decay", "n", "|a_n|", true},
                              {{"odd n", odd_n, odd_a}});
  }
  m.result("a0", a[0]);
  m.result("max_even_coefficient", even_max);
  m.result("tail", rnls_fourier_tail(oracle.get()));
  m.result("reconstruction_error_t0", recon);
  m.result("reconstruction_tolerance", kReconstructionTolerance);
  m.write();
  std::printf("a_0 = %.3e, max even |a_n| = %.3e\n", a[0], even_max);
  std::printf("reconstruction error at t = 0: %.3e (tolerance %.0e)\n", recon,
              kReconstructionTolerance);
  if (!(recon < kReconstructionTolerance)) {
    std::fprintf(stderr, "error: reconstruction error exceeds tolerance\n");
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularized defocusing NLS laboratory"};
  app.set_version_flag("--version", std::string(rnls_version()));
  app.require_subcommand(1);

  CommonFlags common;
  SimulateFlags sim;
  SpectrumFlags spec;
  ThresholdFlags thr;

  auto* simulate = app.add_subcommand("simulate", "Time evolution of the perturbed black soliton");
  add_common(simulate, common);
  simulate->add_option("--scheme", sim.scheme, "linear or nonlinear (default nonlinear)");
  simulate->add_option("--stride", sim.stride, "Steps between stored snapshots");
  simulate->add_option("--ceiling", sim.ceiling, "Abort when max|u| exceeds this value")
      ->capture_default_str();

  auto* convergence =
      app.add_subcommand("convergence", "Linear-scheme error against the Fourier solution at K and 2K");
  add_common(convergence, common);

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the linearized pencil");
  add_common(spectrum, common);
  spectrum->add_option("--background", spec.background, "discrete or tanh")->capture_default_str();
  spectrum->add_option("--tol", spec.tol, "Instability tolerance on Re lambda")->capture_default_str();

  auto* threshold = app.add_subcommand("threshold", "Bisection for the stability threshold in eps");
  add_common(threshold, common);
  threshold->add_option("--lo", thr.lo, "Lower end of the bracket")->capture_default_str();
  threshold->add_option("--hi", thr.hi, "Upper end of the bracket")->capture_default_str();
  threshold->add_option("--width", thr.width, "Final bracket width")->capture_default_str();
  threshold->add_option("--tol", thr.tol, "Instability tolerance on Re lambda")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle-check", "Fourier coefficients and t = 0 reconstruction");
  add_common(oracle, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*simulate) return cmd_simulate(common, sim);
    if (*convergence) return cmd_convergence(common);
    if (*spectrum) return cmd_spectrum(common, spec);
    if (*threshold) return cmd_threshold(common, thr);
    if (*oracle) return cmd_oracle_check(common);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.message.c_str());
    return kExitUsage;
  } catch (const CallFailure& e) {
    std::fprintf(stderr, "error (%s): %s\n", rnls_status_string(e.status), e.message.c_str());
    if (rnls_status_is_numerical(e.status)) return kExitNumerical;
    if (e.status == RNLS_ERR_INVALID_ARGUMENT || e.status == RNLS_ERR_PARAMETER_MISMATCH) {
      return kExitUsage;
    }
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  }
  return kExitUsage;
}
