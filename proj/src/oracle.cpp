#include "rnls/oracle.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <string>

namespace rnls {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

// Integral of f over [a, b] split into `panels` equal pieces; returns the sum
// and accumulates the Gauss/Kronrod difference of every panel into `error`.
template <class F>
double panel_sum(const F& f, double a, double b, int panels, double& error) {
  const double width = (b - a) / panels;
  double sum = 0.0;
  error = 0.0;
  for (int p = 0; p < panels; ++p) {
    double e = 0.0;
    sum += Kronrod::integrate(f, a + p * width, a + (p + 1) * width, 0, 0.0, &e);
    error += e;
  }
  return sum;
}

}  // namespace

std::vector<double> fourier_coefficients(double half_length, int n_max, double tolerance) {
  if (!(half_length > 0.0)) throw InvalidArgument("fourier: L must be positive");
  if (n_max < 1) throw InvalidArgument("fourier: n_max must be at least 1");
  const double L = half_length;
  std::vector<double> a(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    const double k = std::numbers::pi * n / (2.0 * L);
    auto integrand = [k, L](double x) { return std::tanh(x) * std::cos(k * (x + L)); };
    // One panel per wavelength to start. The Gauss/Kronrod difference
    // is roundoff-dominated at high n, so refinement stops once two
    // successive panel doublings agree.
    int panels = std::max(8, n / 2);
    double error = 0.0;
    double integral = panel_sum(integrand, -L, L, panels, error);
    double change = error;
    while (error > tolerance * L && change > tolerance * L) {
      if (panels > 64 * std::max(8, n / 2)) {
        throw NumericalFailure(NumericalFailure::Kind::quadrature,
                               "fourier: coefficient " + std::to_string(n) +
                                   " did not converge (successive change " +
                                   std::to_string(change / L) + ")");
      }
      panels *= 2;
      const double refined = panel_sum(integrand, -L, L, panels, error);
      change = std::abs(refined - integral);
      integral = refined;
    }
    a[static_cast<std::size_t>(n)] = integral / L;
  }
  return a;
}

FourierSolution FourierSolution::compute(double half_length, double eps, int n_max) {
  if (!(eps >= 0.0)) throw InvalidArgument("fourier: eps must be non-negative");
  return FourierSolution(half_length, eps, fourier_coefficients(half_length, n_max));
}

double FourierSolution::wavenumber(int n) const noexcept {
  return std::numbers::pi * n / (2.0 * half_length_);
}

cplx FourierSolution::phase(int n, double t) const noexcept {
  const double k2 = wavenumber(n) * wavenumber(n);
  return std::polar(1.0, -k2 * t / (1.0 + eps_ * eps_ * k2));
}

double FourierSolution::tail_magnitude() const noexcept {
  const std::size_t n = coefficients_.size();
  double m = 0.0;
  for (std::size_t i = n - std::max<std::size_t>(1, n / 10); i < n; ++i) {
    m = std::max(m, std::abs(coefficients_[i]));
  }
  return m;
}

cplx FourierSolution::evaluate_at(double t, double xi) const {
  cplx u = 0.5 * coefficients_[0];
  for (int n = 1; n <= n_max(); ++n) {
    u += coefficients_[static_cast<std::size_t>(n)] * phase(n, t) *
         std::cos(wavenumber(n) * (xi + half_length_));
  }
  return u;
}

ComplexField FourierSolution::evaluate(double t, const Grid& grid) const {
  if (grid.half_length() != half_length_) {
    throw ParameterMismatch("fourier: grid half-length " + std::to_string(grid.half_length()) +
                            " differs from solution half-length " +
                            std::to_string(half_length_));
  }
  // On the grid, k_n (xi_i + L) = pi n i / (2K): tabulate cos over one period 4K.
  const long period = 4L * grid.half_count();
  std::vector<double> table(static_cast<std::size_t>(period));
  for (long m = 0; m < period; ++m) {
    table[static_cast<std::size_t>(m)] =
        std::cos(std::numbers::pi * static_cast<double>(m) / (2.0 * grid.half_count()));
  }
  std::vector<cplx> weights(coefficients_.size());
  weights[0] = 0.5 * coefficients_[0];
  for (int n = 1; n <= n_max(); ++n) {
    weights[static_cast<std::size_t>(n)] = coefficients_[static_cast<std::size_t>(n)] * phase(n, t);
  }
  std::vector<cplx> u(grid.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    cplx s = 0.0;
    long idx = 0;
    const long stride = static_cast<long>(i) % period;
    for (std::size_t n = 0; n < weights.size(); ++n) {
      s += weights[n] * table[static_cast<std::size_t>(idx)];
      idx += stride;
      if (idx >= period) idx -= period;
    }
    u[i] = s;
  }
  return ComplexField(grid, std::move(u));
}

std::vector<ErrorSample> error_function(const Trajectory& fd, const FourierSolution& exact) {
  if (fd.config.scheme != Scheme::linear) {
    throw ParameterMismatch("error function: trajectory was not produced by the linear scheme");
  }
  if (fd.config.amp != 0.0) {
    throw ParameterMismatch("error function: the oracle starts from tanh, so the amplitude must be 0");
  }
  if (fd.config.eps != exact.eps()) {
    throw ParameterMismatch("error function: eps differs between trajectory and oracle");
  }
  if (fd.config.grid.half_length() != exact.half_length()) {
    throw ParameterMismatch("error function: L differs between trajectory and oracle");
  }
  std::vector<ErrorSample> out;
  out.reserve(fd.times.size());
  for (std::size_t s = 0; s < fd.times.size(); ++s) {
    const ComplexField ref = exact.evaluate(fd.times[s], fd.config.grid);
    double err = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
      err = std::max(err, std::abs(fd.fields[s][i] - ref[i]));
    }
    out.push_back({fd.times[s], err});
  }
  return out;
}

}  // namespace rnls
