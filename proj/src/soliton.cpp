#include "rnls/soliton.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <string>

namespace rnls {

namespace {

double sech(double x) { return 1.0 / std::cosh(x); }

}  // namespace

const ThresholdConstants& ThresholdConstants::get() {
  static const ThresholdConstants c = [] {
    const double s5 = std::sqrt(5.0);
    const double s8 = std::sqrt(8.0);
    return ThresholdConstants{std::pow(5.0 / 8.0, 0.25), std::sqrt(s5 / (s8 + 2.0 * s5)),
                              1.0 / std::sqrt(2.0)};
  }();
  return c;
}

ModelParams ModelParams::from_mu(double mu) { return {mu, mu_to_eps(mu)}; }
ModelParams ModelParams::from_eps(double eps) { return {eps_to_mu(eps), eps}; }

double mu_to_eps(double mu) {
  if (!(mu >= 0.0) || !(mu < ThresholdConstants::get().mu1)) {
    throw InvalidArgument("mu_to_eps: mu must lie in [0, 1/sqrt2), got " + std::to_string(mu));
  }
  return mu / std::sqrt(1.0 - 2.0 * mu * mu);
}

double eps_to_mu(double eps) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw InvalidArgument("eps_to_mu: eps must be finite and non-negative");
  }
  return eps / std::sqrt(1.0 + 2.0 * eps * eps);
}

double dispersion_omega(double k, double mu) {
  if (!(mu > 0.0)) throw InvalidArgument("dispersion_omega: mu must be positive");
  const double k2 = k * k;
  return k2 / (1.0 + mu * mu * k2);
}

DarkSoliton::DarkSoliton(double speed) : speed_(speed), amplitude_(0.0) {
  if (!(std::abs(speed) < 1.0)) {
    throw InvalidArgument("dark soliton: |c| must be below 1, got " + std::to_string(speed));
  }
  amplitude_ = std::sqrt(1.0 - speed * speed);
}

cplx DarkSoliton::operator()(double t, double x) const {
  const cplx profile(amplitude_ * std::tanh(amplitude_ * (x - 2.0 * speed_ * t)), speed_);
  return profile * std::polar(1.0, -2.0 * t);
}

cplx dark_soliton(double c, double t, double x) { return DarkSoliton(c)(t, x); }

ComplexField black_soliton(const Grid& grid) {
  std::vector<cplx> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::tanh(grid.node(i));
  return ComplexField(grid, std::move(v));
}

std::vector<double> stationary_black_soliton(const Grid& grid) {
  // Unknowns are the K nodes right of the center; the center is pinned to
  // zero by oddness, which also removes the translational null direction.
  const std::size_t K = static_cast<std::size_t>(grid.half_count());
  const std::size_t c = grid.center();
  const double inv_h2 = 1.0 / (grid.spacing() * grid.spacing());

  std::vector<double> u(K);
  for (std::size_t m = 0; m < K; ++m) u[m] = std::tanh(grid.node(c + m + 1));

  auto residual = [&](const std::vector<double>& v) {
    std::vector<double> r(K);
    for (std::size_t m = 0; m < K; ++m) {
      const double left = (m == 0) ? 0.0 : v[m - 1];
      const double lap = (m + 1 == K) ? 2.0 * (v[m - 1] - v[m]) * inv_h2
                                      : (v[m + 1] - 2.0 * v[m] + left) * inv_h2;
      r[m] = lap + 2.0 * (1.0 - v[m] * v[m]) * v[m];
    }
    return r;
  };

  constexpr int kMaxIterations = 50;
  for (int it = 0; it < kMaxIterations; ++it) {
    std::vector<double> r = residual(u);
    std::vector<double> lo(K - 1, inv_h2), d(K), up(K - 1, inv_h2);
    for (std::size_t m = 0; m < K; ++m) d[m] = -2.0 * inv_h2 + 2.0 - 6.0 * u[m] * u[m];
    lo.back() = 2.0 * inv_h2;
    for (auto& x : r) x = -x;
    TridiagonalLU<double>(Tridiagonal<double>(std::move(lo), std::move(d), std::move(up)))
        .solve_in_place(r);
    double step = 0.0;
    for (std::size_t m = 0; m < K; ++m) {
      u[m] += r[m];
      step = std::max(step, std::abs(r[m]));
    }
    if (step < 1e-14) {
      std::vector<double> full(grid.size());
      full[c] = 0.0;
      for (std::size_t m = 0; m < K; ++m) {
        full[c + m + 1] = u[m];
        full[c - m - 1] = -u[m];
      }
      return full;
    }
  }
  throw NumericalFailure(NumericalFailure::Kind::non_finite,
                         "stationary soliton: Newton iteration did not converge");
}

double v_phi_profile(double eps, double xi) {
  if (!(eps >= 0.0)) throw InvalidArgument("v_phi_profile: eps must be non-negative");
  const double s = sech(xi);
  return -0.5 * (1.0 + 2.0 * eps * eps) + 1.5 * eps * eps * s * s;
}

double pairing_phi_vphi(double eps) {
  if (!(eps >= 0.0)) throw InvalidArgument("pairing: eps must be non-negative");
  const double e2 = eps * eps;
  return -1.0 + (8.0 / 5.0) * e2 * e2;
}

double pairing_root() {
  boost::uintmax_t max_iter = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(
      [](double e) { return pairing_phi_vphi(e); }, 0.0, 2.0,
      boost::math::tools::eps_tolerance<double>(52), max_iter);
  return 0.5 * (lo + hi);
}

}  // namespace rnls
