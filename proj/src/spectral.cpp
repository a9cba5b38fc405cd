#include "rnls/spectral.hpp"

#include <complex>
#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rnls/soliton.hpp"

namespace rnls {

namespace {

BandedOperator shifted_operator(const BandedOperator& a, std::span<const double> phi, double c) {
  std::vector<double> lower(a.lower().begin(), a.lower().end());
  std::vector<double> diag(a.diag().begin(), a.diag().end());
  std::vector<double> upper(a.upper().begin(), a.upper().end());
  for (auto& x : lower) x = -x;
  for (auto& x : upper) x = -x;
  for (std::size_t i = 0; i < diag.size(); ++i) diag[i] = -diag[i] + c * phi[i] * phi[i] - 2.0;
  return BandedOperator(std::move(lower), std::move(diag), std::move(upper));
}

std::vector<double> sampled_tanh(const Grid& grid) {
  std::vector<double> phi(grid.size());
  for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = std::tanh(grid.node(i));
  return phi;
}

std::vector<double> sampled_sech2(const Grid& grid) {
  std::vector<double> d(grid.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double s = 1.0 / std::cosh(grid.node(i));
    d[i] = s * s;
  }
  return d;
}

double max_abs(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

// Writes c * B^-1 T into the n x n block of the column-major N x N matrix m
// starting at (row0, col0).
void place_block(std::vector<double>& m, lapack_int ld, std::size_t row0, std::size_t col0,
                 const TridiagonalLU<double>& b, const BandedOperator& t, double c) {
  const std::size_t n = t.size();
  std::vector<double> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(col.begin(), col.end(), 0.0);
    if (j > 0) col[j - 1] = t.upper()[j - 1];
    col[j] = t.diag()[j];
    if (j + 1 < n) col[j + 1] = t.lower()[j];
    b.solve_in_place(col);
    double* dst = m.data() + (col0 + j) * static_cast<std::size_t>(ld) + row0;
    for (std::size_t i = 0; i < n; ++i) dst[i] = c * col[i];
  }
}

Parity classify(std::span<const cplx> x) {
  const std::size_t n = x.size();
  double even = 0.0, odd = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    even = std::max(even, std::abs(x[i] + x[n - 1 - i]));
    odd = std::max(odd, std::abs(x[i] - x[n - 1 - i]));
  }
  const double scale = std::max(even, odd);
  if (scale == 0.0) return Parity::even;
  if (even <= 1e-6 * scale) return Parity::odd;
  if (odd <= 1e-6 * scale) return Parity::even;
  return Parity::mixed;
}

double symmetry_deviation(const std::vector<cplx>& lam) {
  double worst = 0.0;
  for (const cplx& l : lam) {
    double d_neg = std::numeric_limits<double>::infinity();
    double d_conj = d_neg;
    for (const cplx& m : lam) {
      d_neg = std::min(d_neg, std::abs(m + l));
      d_conj = std::min(d_conj, std::abs(m - std::conj(l)));
    }
    worst = std::max(worst, std::max(d_neg, d_conj) / std::max(1.0, std::abs(l)));
  }
  return worst;
}

// One LU, three solves of (M - sigma) x = x_prev with sigma just off lambda.
std::vector<cplx> inverse_iteration(const std::vector<double>& m, lapack_int n, cplx lambda) {
  const double offset = 1e-10 * std::max(1.0, std::abs(lambda));
  std::vector<lapack_int> ipiv(static_cast<std::size_t>(n));
  std::vector<cplx> x(static_cast<std::size_t>(n));
  for (lapack_int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = 1.0 + 0.001 * i;
  auto normalize = [](std::vector<cplx>& v) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (std::abs(v[i]) > std::abs(v[k])) k = i;
    }
    const cplx s = v[k];
    if (s != 0.0) {
      for (auto& e : v) e /= s;
    }
  };

  if (lambda.imag() == 0.0) {
    std::vector<double> a = m;
    const double sigma = lambda.real() + offset;
    for (lapack_int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * (n + 1)] -= sigma;
    lapack_int info = LAPACKE_dgetrf(LAPACK_COL_MAJOR, n, n, a.data(), n, ipiv.data());
    if (info < 0) {
      throw NumericalFailure(NumericalFailure::Kind::eigensolver,
                             "inverse iteration: dgetrf info " + std::to_string(info));
    }
    std::vector<double> xr(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < xr.size(); ++i) xr[i] = x[i].real();
    for (int it = 0; it < 3; ++it) {
      LAPACKE_dgetrs(LAPACK_COL_MAJOR, 'N', n, 1, a.data(), n, ipiv.data(), xr.data(), n);
      const double s = max_abs(xr);
      for (auto& e : xr) e /= s;
    }
    for (std::size_t i = 0; i < xr.size(); ++i) x[i] = xr[i];
  } else {
    std::vector<lapack_complex_double> a(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) a[i] = m[i];
    const cplx sigma = lambda + offset;
    for (lapack_int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * (n + 1)] -= sigma;
    lapack_int info = LAPACKE_zgetrf(LAPACK_COL_MAJOR, n, n, a.data(), n, ipiv.data());
    if (info < 0) {
      throw NumericalFailure(NumericalFailure::Kind::eigensolver,
                             "inverse iteration: zgetrf info " + std::to_string(info));
    }
    std::vector<lapack_complex_double> xc(x.begin(), x.end());
    for (int it = 0; it < 3; ++it) {
      LAPACKE_zgetrs(LAPACK_COL_MAJOR, 'N', n, 1, a.data(), n, ipiv.data(), xc.data(), n);
      double s = 0.0;
      for (auto& e : xc) s = std::max(s, std::abs(e));
      for (auto& e : xc) e /= s;
    }
    x.assign(xc.begin(), xc.end());
  }
  normalize(x);
  return x;
}

}  // namespace

LinearizedPencil assemble_pencil(double eps, const Grid& grid, Background background) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw InvalidArgument("pencil: eps must be finite and non-negative");
  }
  const auto a = build_neumann_laplacian(grid);
  std::vector<double> phi = background == Background::discrete_stationary
                                ? stationary_black_soliton(grid)
                                : sampled_tanh(grid);
  auto lplus = shifted_operator(a, phi, 6.0);
  auto lminus = shifted_operator(a, phi, 2.0);
  return LinearizedPencil{grid,     eps,    background,
                          std::move(phi), std::move(lplus), std::move(lminus),
                          combine_real(1.0, -eps * eps, a)};
}

double EssentialSpectrum::curve(double k) const {
  return k * std::sqrt(4.0 + k * k) / (1.0 + eps * eps * k * k);
}

EssentialSpectrum essential_spectrum(double eps) {
  if (!(eps > 0.0)) {
    throw InvalidArgument("essential spectrum: unbounded for eps = 0 (band is the whole imaginary axis)");
  }
  // For eps^2 > 1/2 the curve overshoots its k -> infinity limit at
  // k^2 = 2 / (2 eps^2 - 1).
  const double e2 = eps * eps;
  double top = 1.0 / e2;
  if (e2 > 0.5) {
    const double s = 2.0 / (2.0 * e2 - 1.0);
    top = std::sqrt(s * (4.0 + s)) / (1.0 + e2 * s);
  }
  return EssentialSpectrum{eps, -top, top};
}

Interval lplus_continuous_spectrum(double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("L+ continuous spectrum: eps must be positive");
  const double top = 1.0 / (eps * eps);
  if (eps == 0.5) return Interval{4.0, 4.0, true};
  return Interval{std::min(4.0, top), std::max(4.0, top), false};
}

double verify_vphi_residual(double eps, const Grid& grid) {
  const std::vector<double> phi = sampled_tanh(grid);
  const std::vector<double> dphi = sampled_sech2(grid);
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = v_phi_profile(eps, grid.node(i));
  const auto a = build_neumann_laplacian(grid);
  const auto lv = shifted_operator(a, phi, 2.0).apply(v);
  const auto bd = combine_real(1.0, -eps * eps, a).apply(dphi);
  double r = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) r = std::max(r, std::abs(lv[i] - bd[i]));
  return r;
}

NearKernelResiduals near_kernel_residuals(const Grid& grid) {
  const std::vector<double> phi = sampled_tanh(grid);
  const std::vector<double> dphi = sampled_sech2(grid);
  const auto a = build_neumann_laplacian(grid);
  return NearKernelResiduals{max_abs(shifted_operator(a, phi, 6.0).apply(dphi)),
                             max_abs(shifted_operator(a, phi, 2.0).apply(phi))};
}

const char* to_string(Verdict v) noexcept {
  return v == Verdict::stable ? "stable" : "unstable";
}

const char* to_string(Parity p) noexcept {
  switch (p) {
    case Parity::even: return "even";
    case Parity::odd: return "odd";
    default: return "mixed";
  }
}

SpectralReport solve_pencil(const LinearizedPencil& pencil, double tol_unstable) {
  const std::size_t n = pencil.grid.size();
  const auto big = static_cast<lapack_int>(2 * n);
  std::vector<double> m(2 * n * 2 * n, 0.0);
  const TridiagonalLU<double> b(pencil.weight);
  place_block(m, big, 0, n, b, pencil.lminus, 1.0);
  place_block(m, big, n, 0, b, pencil.lplus, -1.0);

  std::vector<double> work = m;
  std::vector<double> wr(2 * n), wi(2 * n);
  double dummy = 0.0;
  const lapack_int info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'N', big, work.data(), big,
                                        wr.data(), wi.data(), &dummy, 1, &dummy, 1);
  if (info != 0) {
    double norm = 0.0;
    for (double x : m) norm = std::max(norm, std::abs(x));
    throw NumericalFailure(NumericalFailure::Kind::eigensolver,
                           "dgeev info " + std::to_string(info) + " (max |entry| " +
                               std::to_string(norm) + ")");
  }

  SpectralReport r{};
  r.eps = pencil.eps;
  r.half_length = pencil.grid.half_length();
  r.half_count = pencil.grid.half_count();
  r.tol_unstable = tol_unstable;
  r.eigenvalues.resize(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) r.eigenvalues[i] = cplx(wr[i], wi[i]);

  std::size_t k = 0;
  for (std::size_t i = 1; i < r.eigenvalues.size(); ++i) {
    const cplx& c = r.eigenvalues[i];
    const cplx& best = r.eigenvalues[k];
    if (c.real() > best.real() || (c.real() == best.real() && c.imag() > best.imag())) k = i;
  }
  r.dominant = r.eigenvalues[k];
  r.max_real = r.dominant.real();
  r.verdict = r.max_real > tol_unstable ? Verdict::unstable : Verdict::stable;
  r.symmetry_deviation = symmetry_deviation(r.eigenvalues);

  const auto w = inverse_iteration(m, big, r.dominant);
  r.dominant_u.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
  r.dominant_v.assign(w.begin() + static_cast<std::ptrdiff_t>(n), w.end());
  r.parity_u = classify(r.dominant_u);
  r.parity_v = classify(r.dominant_v);
  return r;
}

ThresholdResult find_threshold(const Grid& grid, double eps_lo, double eps_hi, double width,
                               double tol_unstable,
                               const std::function<void(const BisectionStep&)>& progress) {
  if (!(eps_lo >= 0.0) || !(eps_hi > eps_lo)) {
    throw InvalidArgument("threshold: bracket must satisfy 0 <= eps_lo < eps_hi");
  }
  if (!(width > 0.0)) throw InvalidArgument("threshold: width must be positive");
  auto evaluate = [&](double eps) {
    return solve_pencil(assemble_pencil(eps, grid), tol_unstable);
  };
  const auto lo_report = evaluate(eps_lo);
  const auto hi_report = evaluate(eps_hi);
  if (lo_report.verdict == hi_report.verdict) {
    throw InvalidArgument(std::string("threshold: bracket verdicts are both ") +
                          to_string(lo_report.verdict));
  }
  if (lo_report.verdict != Verdict::stable) {
    throw InvalidArgument("threshold: bracket must be stable at eps_lo and unstable at eps_hi");
  }

  ThresholdResult result{};
  result.closed_form = pairing_root();
  double lo = eps_lo, hi = eps_hi;
  int iteration = 0;
  while (hi - lo >= width) {
    const double mid = 0.5 * (lo + hi);
    const auto rep = evaluate(mid);
    ++iteration;
    BisectionStep step{iteration, lo, hi, mid, rep.verdict, rep.max_real};
    result.trace.push_back(step);
    if (progress) progress(step);
    (rep.verdict == Verdict::stable ? lo : hi) = mid;
  }
  result.estimate = 0.5 * (lo + hi);
  return result;
}

GrowthRateEstimate growth_rate_estimate(double eps, double half_length, int half_count) {
  const double coarse =
      solve_pencil(assemble_pencil(eps, Grid::create(half_length, half_count))).max_real;
  const double fine =
      solve_pencil(assemble_pencil(eps, Grid::create(half_length, 2 * half_count))).max_real;
  return GrowthRateEstimate{coarse, fine, (4.0 * fine - coarse) / 3.0};
}

}  // namespace rnls
