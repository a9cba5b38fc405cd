#include "rnls/grid.hpp"

#include <string>

namespace rnls {

Grid Grid::create(double half_length, int half_count) {
  if (!(half_length > 0.0) || !std::isfinite(half_length)) {
    throw InvalidArgument("grid: half-length L must be positive, got " +
                          std::to_string(half_length));
  }
  if (half_count < 2) {
    throw InvalidArgument("grid: K must be at least 2, got " + std::to_string(half_count));
  }
  return Grid(half_length, half_count);
}

std::vector<double> Grid::nodes() const {
  std::vector<double> xs(size());
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = node(i);
  return xs;
}

ComplexField::ComplexField(const Grid& grid) : grid_(grid), values_(grid.size()) {}

ComplexField::ComplexField(const Grid& grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw InvalidArgument("field: " + std::to_string(values_.size()) +
                          " values for a grid of " + std::to_string(grid_.size()) +
                          " nodes");
  }
  if (!all_finite()) {
    throw NumericalFailure(NumericalFailure::Kind::non_finite, "field: non-finite entry");
  }
}

double ComplexField::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexField::max_abs_imag() const noexcept {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v.imag()));
  return m;
}

bool ComplexField::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](const cplx& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

std::vector<double> ComplexField::real_part() const {
  std::vector<double> r(values_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = values_[i].real();
  return r;
}

std::vector<double> ComplexField::imag_part() const {
  std::vector<double> r(values_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = values_[i].imag();
  return r;
}

BandedOperator build_neumann_laplacian(const Grid& grid) {
  const std::size_t n = grid.size();
  const double inv_h2 = 1.0 / (grid.spacing() * grid.spacing());
  std::vector<double> lower(n - 1, inv_h2), diag(n, -2.0 * inv_h2), upper(n - 1, inv_h2);
  // Ghost-point elimination u_0 = u_2 doubles the inward coupling at each wall.
  upper.front() = 2.0 * inv_h2;
  lower.back() = 2.0 * inv_h2;
  return BandedOperator(std::move(lower), std::move(diag), std::move(upper));
}

Tridiagonal<cplx> combine(cplx c0, cplx c1, const BandedOperator& a,
                          std::span<const cplx> diag) {
  const std::size_t n = a.size();
  if (!diag.empty() && diag.size() != n) {
    throw InvalidArgument("combine: diagonal length mismatch");
  }
  std::vector<cplx> lo(n - 1), d(n), up(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    lo[i] = c1 * a.lower()[i];
    up[i] = c1 * a.upper()[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = c0 + c1 * a.diag()[i] + (diag.empty() ? cplx(0.0) : diag[i]);
  }
  return Tridiagonal<cplx>(std::move(lo), std::move(d), std::move(up));
}

Tridiagonal<double> combine_real(double c0, double c1, const BandedOperator& a) {
  const std::size_t n = a.size();
  std::vector<double> lo(n - 1), d(n), up(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    lo[i] = c1 * a.lower()[i];
    up[i] = c1 * a.upper()[i];
  }
  for (std::size_t i = 0; i < n; ++i) d[i] = c0 + c1 * a.diag()[i];
  return Tridiagonal<double>(std::move(lo), std::move(d), std::move(up));
}

std::vector<cplx> solve_banded(const Tridiagonal<cplx>& op, std::span<const cplx> rhs) {
  return TridiagonalLU<cplx>(op).solve(rhs);
}

ComplexField solve_banded(const Tridiagonal<cplx>& op, const ComplexField& rhs) {
  return ComplexField(rhs.grid(), solve_banded(op, rhs.values()));
}

cplx weighted_inner(const Grid& grid, std::span<const cplx> f, std::span<const cplx> g) {
  if (f.size() != grid.size() || g.size() != grid.size()) {
    throw InvalidArgument("weighted_inner: size mismatch");
  }
  cplx s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += grid.weight(i) * std::conj(f[i]) * g[i];
  return s * grid.spacing();
}

}  // namespace rnls
