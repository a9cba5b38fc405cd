#include <doctest.h>

#include "oracles.hpp"
#include "rnls/oracle.hpp"

using namespace rnls;

namespace {

const FourierSolution& reference() {
  static const FourierSolution s = FourierSolution::compute(10.0, 0.5, 2000);
  return s;
}

}  // namespace

TEST_CASE("coefficient parity") {
  const auto& a = reference().coefficients();
  REQUIRE(a.size() == 2001);
  CHECK(std::abs(a[0]) < 1e-12);
  for (std::size_t n = 2; n < a.size(); n += 2) CHECK(std::abs(a[n]) < 1e-12);
}

TEST_CASE("coefficients agree with composite Simpson at low n") {
  const auto& a = reference().coefficients();
  for (int n : {1, 3, 5, 11, 41}) {
    CAPTURE(n);
    CHECK(std::abs(a[static_cast<std::size_t>(n)] - oracles::fourier_coefficient_simpson(10.0, n)) < 1e-11);
  }
}

TEST_CASE("coefficient tail is small") { CHECK(reference().tail_magnitude() < 1e-3); }

TEST_CASE("t = 0 reconstruction") {
  const auto g = Grid::create(10.0, 200);
  const auto u = reference().evaluate(0.0, g);
  double err = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) err = std::max(err, std::abs(u[i] - std::tanh(g.node(i))));
  CHECK(err < 1e-6);
  CHECK(std::abs(reference().evaluate_at(0.0, 1.3) - std::tanh(1.3)) < 1e-6);
}

TEST_CASE("grid evaluation matches pointwise evaluation") {
  const auto g = Grid::create(10.0, 40);
  const auto u = reference().evaluate(2.5, g);
  for (std::size_t i = 0; i < g.size(); i += 7) {
    CHECK(std::abs(u[i] - reference().evaluate_at(2.5, g.node(i))) < 1e-10);
  }
}

TEST_CASE("phase factors have unit modulus") {
  for (int n : {1, 10, 500, 2000}) {
    for (double t : {0.0, 0.3, 5.0, 1e3}) CHECK(std::abs(reference().phase(n, t)) == doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("evaluation rejects an L mismatch") {
  CHECK_THROWS_AS(reference().evaluate(0.0, Grid::create(20.0, 400)), ParameterMismatch);
}

TEST_CASE("bad arguments") {
  CHECK_THROWS_AS(fourier_coefficients(0.0, 10), InvalidArgument);
  CHECK_THROWS_AS(fourier_coefficients(10.0, 0), InvalidArgument);
  CHECK_THROWS_AS(FourierSolution::compute(10.0, -1.0), InvalidArgument);
}

TEST_CASE("weighted norm of the sampled partial sum is invariant when modes resolve on the grid") {
  // With n_max = 2K the cosine modes are discrete eigenvectors of A_N.
  const auto sol = FourierSolution::compute(10.0, 0.5, 400);
  const auto g = Grid::create(10.0, 200);
  auto form = [&](double t) {
    const auto u = sol.evaluate(t, g);
    return oracles::weighted_form({u.values().begin(), u.values().end()}, 0.5, g.spacing());
  };
  const double q0 = form(0.0);
  for (double t : {1.0, 2.5, 5.0}) CHECK(std::abs(form(t) - q0) < 1e-10 * q0);
}

TEST_CASE("error function against the linear scheme") {
  auto cfg = *preset("fig2");
  const auto traj = run(cfg);
  const auto err = error_function(traj, reference());
  REQUIRE(err.size() == traj.times.size());
  CHECK(err.front().error < 1e-6);
  for (const auto& e : err) CHECK(std::isfinite(e.error));
  CHECK(err.back().error > 100 * err.front().error);
  CHECK(err.back().error < 0.1);
}

TEST_CASE("error function rejects mismatched inputs") {
  auto cfg = *preset("fig2");
  cfg.t_final = 0.1;
  auto nl = cfg;
  nl.scheme = Scheme::nonlinear;
  CHECK_THROWS_AS(error_function(run(nl), reference()), ParameterMismatch);
  auto perturbed = cfg;
  perturbed.amp = 0.01;
  CHECK_THROWS_AS(error_function(run(perturbed), reference()), ParameterMismatch);
  auto other_eps = cfg;
  other_eps.eps = 0.7;
  CHECK_THROWS_AS(error_function(run(other_eps), reference()), ParameterMismatch);
  SchemeConfig other_l(Grid::create(12.0, 240));
  other_l.scheme = Scheme::linear;
  other_l.amp = 0.0;
  other_l.t_final = 0.1;
  CHECK_THROWS_AS(error_function(run(other_l), reference()), ParameterMismatch);
}

TEST_CASE("K = 100 and K = 200 runs still show second order") {
  auto c1 = *preset("fig2");
  c1.grid = Grid::create(10.0, 100);
  c1.tau = c1.grid.spacing();
  auto c2 = *preset("fig2");
  c2.snapshot_stride = 2;
  const auto e1 = error_function(run(c1), reference());
  const auto e2 = error_function(run(c2), reference());
  REQUIRE(e1.size() == e2.size());
  double s = 0.0;
  for (std::size_t i = 1; i < e1.size(); ++i) s += e1[i].error / e2[i].error;
  CHECK(s / static_cast<double>(e1.size() - 1) == doctest::Approx(4.0).epsilon(0.1));
}
