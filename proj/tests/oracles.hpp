#pragma once

// Reference computations for the tests. Nothing here calls the code under
// test except where a library profile is the thing being integrated.

#include <boost/math/differentiation/finite_difference.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracles {

using cplx = std::complex<double>;

inline double sech2(double x) {
  const double s = 1.0 / std::cosh(x);
  return s * s;
}

/// (phi', V)_eps = int phi' V + eps^2 phi'' V' over the line, V' by finite
/// differences of the supplied profile.
inline double pairing_quadrature(double eps, const std::function<double(double)>& v) {
  using boost::math::differentiation::finite_difference_derivative;
  auto integrand = [&](double x) {
    const double dphi = sech2(x);
    const double d2phi = -2.0 * sech2(x) * std::tanh(x);
    const double dv = finite_difference_derivative<decltype(v), double, 8>(v, x);
    return dphi * v(x) + eps * eps * d2phi * dv;
  };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, -40.0, 40.0, 20,
                                                                       1e-14);
}

/// sup_k k sqrt(4 + k^2) / (1 + eps^2 k^2) by maximization on k in [0, kmax]
/// plus the k -> infinity limit.
inline double essential_band_sup(double eps, double kmax = 1e4) {
  auto neg = [eps](double k) { return -k * std::sqrt(4.0 + k * k) / (1.0 + eps * eps * k * k); };
  const auto r = boost::math::tools::brent_find_minima(neg, 0.0, kmax, 52);
  return std::max(-r.second, 1.0 / (eps * eps));
}

/// Dense Gaussian elimination with partial pivoting.
inline std::vector<cplx> dense_solve(std::vector<std::vector<cplx>> a, std::vector<cplx> b) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a[i][k]) > std::abs(a[p][k])) p = i;
    }
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<cplx> x(n);
  for (std::size_t k = n; k-- > 0;) {
    cplx s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
    x[k] = s / a[k][k];
  }
  return x;
}

/// Neumann second difference written out node by node.
inline std::vector<cplx> neumann_second_difference(const std::vector<cplx>& u, double h) {
  const std::size_t n = u.size();
  std::vector<cplx> out(n);
  out[0] = 2.0 * (u[1] - u[0]) / (h * h);
  out[n - 1] = 2.0 * (u[n - 2] - u[n - 1]) / (h * h);
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (u[i + 1] - 2.0 * u[i] + u[i - 1]) / (h * h);
  return out;
}

/// h sum_k w_k conj(u_k) [(1 - eps^2 A_N) u]_k with trapezoid weights.
inline double weighted_form(const std::vector<cplx>& u, double eps, double h) {
  const auto au = neumann_second_difference(u, h);
  cplx s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double w = (i == 0 || i + 1 == u.size()) ? 0.5 : 1.0;
    s += w * std::conj(u[i]) * (u[i] - eps * eps * au[i]);
  }
  return (s * h).real();
}

/// The i-th node of the grid with half-length L and half count K.
inline double node(double L, int K, std::size_t i) {
  return L * (static_cast<double>(static_cast<long>(i) - K) / K);
}

/// a_n by composite Simpson on m intervals; an independent check of the
/// library quadrature at low n.
inline double fourier_coefficient_simpson(double L, int n, int m = 20000) {
  const double k = M_PI * n / (2.0 * L);
  const double h = 2.0 * L / m;
  auto f = [&](double x) { return std::tanh(x) * std::cos(k * (x + L)); };
  double s = f(-L) + f(L);
  for (int i = 1; i < m; ++i) s += (i % 2 ? 4.0 : 2.0) * f(-L + i * h);
  return s * h / 3.0 / L;
}

}  // namespace oracles
