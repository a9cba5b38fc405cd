#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

#include "rnls/error.hpp"

namespace rnls {

using cplx = std::complex<double>;

/// Uniform grid of 2K+1 nodes on [-L, L], xi_i = L (i - K) / K, i = 0..2K.
class Grid {
 public:
  /// Throws InvalidArgument unless L > 0 and K >= 2.
  static Grid create(double half_length, int half_count);

  double half_length() const noexcept { return half_length_; }
  int half_count() const noexcept { return half_count_; }
  double spacing() const noexcept { return spacing_; }
  std::size_t size() const noexcept { return 2 * static_cast<std::size_t>(half_count_) + 1; }
  std::size_t center() const noexcept { return static_cast<std::size_t>(half_count_); }
  std::size_t mirror(std::size_t i) const noexcept { return size() - 1 - i; }

  // Written as L * (ratio) so the end nodes are exactly -L and +L and the
  // center node is exactly zero.
  double node(std::size_t i) const noexcept {
    return half_length_ * (static_cast<double>(static_cast<long>(i) - half_count_) /
                           static_cast<double>(half_count_));
  }
  std::vector<double> nodes() const;

  /// Trapezoid weight: 1/2 at the two walls, 1 elsewhere. A_N is self-adjoint
  /// in the inner product h * sum_k w_k conj(f_k) g_k.
  double weight(std::size_t i) const noexcept {
    return (i == 0 || i + 1 == size()) ? 0.5 : 1.0;
  }

  friend bool operator==(const Grid& a, const Grid& b) noexcept {
    return a.half_length_ == b.half_length_ && a.half_count_ == b.half_count_;
  }

 private:
  Grid(double half_length, int half_count)
      : half_length_(half_length),
        half_count_(half_count),
        spacing_(half_length / half_count) {}

  double half_length_;
  int half_count_;
  double spacing_;
};

/// Complex samples of u(t, .) on a grid. Every constructor rejects a length
/// mismatch and non-finite entries.
class ComplexField {
 public:
  explicit ComplexField(const Grid& grid);
  ComplexField(const Grid& grid, std::vector<cplx> values);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const cplx> values() const noexcept { return values_; }
  const cplx& operator[](std::size_t i) const noexcept { return values_[i]; }

  double max_abs() const noexcept;
  double max_abs_imag() const noexcept;
  bool all_finite() const noexcept;

  std::vector<double> real_part() const;
  std::vector<double> imag_part() const;

 private:
  Grid grid_;
  std::vector<cplx> values_;
};

/// Three-band matrix. lower[i] sits at (i+1, i), upper[i] at (i, i+1).
template <class T>
class Tridiagonal {
 public:
  Tridiagonal(std::vector<T> lower, std::vector<T> diag, std::vector<T> upper)
      : lower_(std::move(lower)), diag_(std::move(diag)), upper_(std::move(upper)) {
    if (diag_.empty() || lower_.size() + 1 != diag_.size() ||
        upper_.size() + 1 != diag_.size()) {
      throw InvalidArgument("tridiagonal: band lengths must be n-1, n, n-1");
    }
  }

  std::size_t size() const noexcept { return diag_.size(); }
  std::span<const T> lower() const noexcept { return lower_; }
  std::span<const T> diag() const noexcept { return diag_; }
  std::span<const T> upper() const noexcept { return upper_; }

  T row_sum(std::size_t i) const noexcept {
    T s = diag_[i];
    if (i > 0) s += lower_[i - 1];
    if (i + 1 < size()) s += upper_[i];
    return s;
  }

  template <class U>
  auto apply(std::span<const U> x) const {
    using R = std::common_type_t<T, U>;
    const std::size_t n = size();
    if (x.size() != n) throw InvalidArgument("tridiagonal apply: size mismatch");
    std::vector<R> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      R s = R(diag_[i]) * R(x[i]);
      if (i > 0) s += R(lower_[i - 1]) * R(x[i - 1]);
      if (i + 1 < n) s += R(upper_[i]) * R(x[i + 1]);
      y[i] = s;
    }
    return y;
  }

  template <class U>
  auto apply(const std::vector<U>& x) const {
    return apply(std::span<const U>(x));
  }

  double max_row_norm() const noexcept {
    double m = 0.0;
    for (std::size_t i = 0; i < size(); ++i) {
      double s = std::abs(diag_[i]);
      if (i > 0) s += std::abs(lower_[i - 1]);
      if (i + 1 < size()) s += std::abs(upper_[i]);
      m = std::max(m, s);
    }
    return m;
  }

 private:
  std::vector<T> lower_;
  std::vector<T> diag_;
  std::vector<T> upper_;
};

using BandedOperator = Tridiagonal<double>;

/// Relative residual target of the banded solve.
inline constexpr double kSolveTolerance = 1e-12;

/// LU factorization of a tridiagonal matrix with row interchanges (the
/// gttrf/gttrs elimination). Throws NumericalFailure(singular) when a pivot
/// falls below pivot_floor * ||A||_inf.
template <class T>
class TridiagonalLU {
 public:
  explicit TridiagonalLU(const Tridiagonal<T>& a, double pivot_floor = 1e-14);

  std::size_t size() const noexcept { return d_.size(); }
  std::vector<T> solve(std::span<const T> rhs) const;
  void solve_in_place(std::span<T> b) const;

 private:
  std::vector<T> dl_, d_, du_, du2_;
  std::vector<unsigned char> swapped_;
};

/// Neumann second-difference matrix of the grid: central rows
/// (u_{k+1} - 2u_k + u_{k-1}) / h^2 and the doubled wall rows 2(u_2 - u_1)/h^2.
BandedOperator build_neumann_laplacian(const Grid& grid);

/// c0 I + c1 A + diag(d). An empty diagonal means zero.
Tridiagonal<cplx> combine(cplx c0, cplx c1, const BandedOperator& a,
                          std::span<const cplx> diag = {});

/// Real variant, used for the weight operator 1 - eps^2 A_N.
Tridiagonal<double> combine_real(double c0, double c1, const BandedOperator& a);

std::vector<cplx> solve_banded(const Tridiagonal<cplx>& op, std::span<const cplx> rhs);
ComplexField solve_banded(const Tridiagonal<cplx>& op, const ComplexField& rhs);

/// h * sum_k w_k conj(f_k) g_k with trapezoid weights.
cplx weighted_inner(const Grid& grid, std::span<const cplx> f, std::span<const cplx> g);

// ---------------------------------------------------------------------------

template <class T>
TridiagonalLU<T>::TridiagonalLU(const Tridiagonal<T>& a, double pivot_floor)
    : dl_(a.lower().begin(), a.lower().end()),
      d_(a.diag().begin(), a.diag().end()),
      du_(a.upper().begin(), a.upper().end()),
      du2_(d_.size() > 2 ? d_.size() - 2 : 0, T(0)),
      swapped_(d_.size() > 1 ? d_.size() - 1 : 0, 0) {
  const std::size_t n = d_.size();
  const double floor = pivot_floor * a.max_row_norm();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d_[i]) >= std::abs(dl_[i])) {
      if (d_[i] != T(0)) {
        const T fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      }
    } else {
      const T fact = d_[i] / dl_[i];
      d_[i] = dl_[i];
      dl_[i] = fact;
      const T temp = du_[i];
      du_[i] = d_[i + 1];
      d_[i + 1] = temp - fact * d_[i + 1];
      if (i + 2 < n) {
        du2_[i] = du_[i + 1];
        du_[i + 1] = -fact * du_[i + 1];
      }
      swapped_[i] = 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(std::abs(d_[i]) > floor)) {
      throw NumericalFailure(NumericalFailure::Kind::singular,
                             "banded solve: pivot " + std::to_string(std::abs(d_[i])) +
                                 " below threshold at row " + std::to_string(i));
    }
  }
}

template <class T>
void TridiagonalLU<T>::solve_in_place(std::span<T> b) const {
  const std::size_t n = d_.size();
  if (b.size() != n) throw InvalidArgument("banded solve: rhs size mismatch");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!swapped_[i]) {
      b[i + 1] -= dl_[i] * b[i];
    } else {
      const T temp = b[i] - dl_[i] * b[i + 1];
      b[i] = b[i + 1];
      b[i + 1] = temp;
    }
  }
  b[n - 1] /= d_[n - 1];
  if (n > 1) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
  for (std::size_t k = n; k-- > 2;) {
    const std::size_t i = k - 2;
    b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
  }
}

template <class T>
std::vector<T> TridiagonalLU<T>::solve(std::span<const T> rhs) const {
  std::vector<T> x(rhs.begin(), rhs.end());
  solve_in_place(x);
  return x;
}

}  // namespace rnls
