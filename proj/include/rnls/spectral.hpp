#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rnls/grid.hpp"

namespace rnls {

/// Background profile about which the pencil is linearized.
enum class Background {
  // stationary_black_soliton(grid): L_- phi = 0 holds exactly on the grid.
  discrete_stationary,
  // tanh sampled at the nodes.
  sampled_tanh,
};

/// The pencil L w = lambda B w with L = [[0, L_-], [-L_+, 0]] and
/// B = diag(1 - eps^2 A_N, 1 - eps^2 A_N), w = (U, V).
struct LinearizedPencil {
  Grid grid;
  double eps;
  Background background;
  std::vector<double> phi;
  BandedOperator lplus;   // -A_N + 6 phi^2 - 2
  BandedOperator lminus;  // -A_N + 2 phi^2 - 2
  BandedOperator weight;  // 1 - eps^2 A_N
};

LinearizedPencil assemble_pencil(double eps, const Grid& grid,
                                 Background background = Background::discrete_stationary);

/// sigma_c = { i k sqrt(4 + k^2) / (1 + eps^2 k^2) }. The band is
/// i [-eps^-2, eps^-2] for eps <= 1/sqrt2 and wider above (i [-2/sqrt3, 2/sqrt3] at eps = 1).
struct EssentialSpectrum {
  double eps;
  double lower;  // imaginary part of the lower endpoint
  double upper;  // supremum of the curve over k
  /// Imaginary part of the curve point at wavenumber k.
  double curve(double k) const;
};
/// Throws InvalidArgument for eps <= 0 (the band is unbounded).
EssentialSpectrum essential_spectrum(double eps);

/// sigma_c(L_+) = { (4 + k^2) / (1 + eps^2 k^2) }.
struct Interval {
  double lower;
  double upper;
  bool degenerate;  // eps = 1/2: the set collapses to {4}
};
/// Throws InvalidArgument for eps <= 0.
Interval lplus_continuous_spectrum(double eps);

/// max_k |L_- V - (1 - eps^2 A_N) phi'| with the closed-form V_phi, tanh and
/// sech^2 sampled at the nodes.
double verify_vphi_residual(double eps, const Grid& grid);

/// ||L_+ phi'||_inf and ||L_- phi||_inf for sampled tanh and sech^2.
struct NearKernelResiduals {
  double lplus_dphi;
  double lminus_phi;
};
NearKernelResiduals near_kernel_residuals(const Grid& grid);

enum class Verdict { stable, unstable };
const char* to_string(Verdict v) noexcept;

enum class Parity { even, odd, mixed };
const char* to_string(Parity p) noexcept;

inline constexpr double kTolUnstable = 5e-3;

struct SpectralReport {
  double eps;
  double half_length;
  int half_count;
  double tol_unstable;
  std::vector<cplx> eigenvalues;
  double max_real;
  Verdict verdict;
  cplx dominant;
  // Dominant eigenvector (U, V), normalized to unit max-norm.
  std::vector<cplx> dominant_u;
  std::vector<cplx> dominant_v;
  Parity parity_u;
  Parity parity_v;
  // max over lambda of the distance from -lambda and conj(lambda) to the
  // nearest computed eigenvalue, relative to max(1, |lambda|).
  double symmetry_deviation;
};

/// Dense eigensolve of B^-1 L. Throws NumericalFailure(eigensolver) if the
/// QR iteration fails to converge.
SpectralReport solve_pencil(const LinearizedPencil& pencil, double tol_unstable = kTolUnstable);

struct BisectionStep {
  int iteration;
  double lo;
  double hi;
  double mid;
  Verdict verdict;
  double max_real;
};

struct ThresholdResult {
  double estimate;
  double closed_form;  // root of pairing_phi_vphi
  std::vector<BisectionStep> trace;
};

/// Bisection in eps on solve_pencil verdicts until hi - lo < width. Throws
/// InvalidArgument unless the bracket is stable at eps_lo and unstable at
/// eps_hi. `progress` is called after each step when set.
ThresholdResult find_threshold(const Grid& grid, double eps_lo, double eps_hi,
                               double width = 1e-3, double tol_unstable = kTolUnstable,
                               const std::function<void(const BisectionStep&)>& progress = {});

/// Richardson estimate of the dominant real part from half counts K and 2K:
/// (4 r_2K - r_K) / 3.
struct GrowthRateEstimate {
  double coarse;
  double fine;
  double extrapolated;
};
GrowthRateEstimate growth_rate_estimate(double eps, double half_length, int half_count);

}  // namespace rnls
