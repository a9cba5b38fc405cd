#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rnls/conserved.hpp"
#include "rnls/soliton.hpp"

using namespace rnls;

namespace {

ComplexField rotated(const ComplexField& u, double theta) {
  std::vector<cplx> v(u.values().begin(), u.values().end());
  for (auto& x : v) x *= std::polar(1.0, theta);
  return ComplexField(u.grid(), v);
}

// Smooth perturbation supported well inside the domain.
ComplexField bump(const Grid& g, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-0.2, 0.2);
  const cplx c1(u(rng), u(rng)), c2(u(rng), u(rng));
  const double x1 = 10 * u(rng), x2 = 10 * u(rng);
  std::vector<cplx> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.node(i);
    v[i] = c1 * std::exp(-(x - x1) * (x - x1)) + c2 * x * std::exp(-0.5 * (x - x2) * (x - x2));
  }
  return ComplexField(g, v);
}

}  // namespace

TEST_CASE("unit-modulus constants have zero energy and mass") {
  const auto g = Grid::create(10.0, 100);
  const ComplexField c(g, std::vector<cplx>(g.size(), std::polar(1.0, 0.7)));
  CHECK(std::abs(energy(c)) < 1e-14);
  CHECK(std::abs(mass(c, 0.5)) < 1e-13);
  CHECK(std::abs(momentum(c, 0.5)) < 1e-14);
}

TEST_CASE("black soliton values") {
  const auto g = Grid::create(20.0, 400);
  const auto u = black_soliton(g);
  const double h2 = g.spacing() * g.spacing();
  CHECK(std::abs(energy(u) - 8.0 / 3.0) < 10 * h2);
  for (double eps : {0.0, 0.5, 1.0}) {
    CHECK(std::abs(mass(u, eps) - (4.0 / 3.0 * eps * eps - 2.0)) < 10 * h2);
    CHECK(momentum(u, eps) == 0.0);
  }
}

TEST_CASE("gauge invariance") {
  const auto g = Grid::create(20.0, 200);
  const auto u = initial_condition(g, 0.3);
  for (double theta : {0.4, 2.0, -1.1}) {
    const auto r = rotated(u, theta);
    CHECK(energy(r) == doctest::Approx(energy(u)).epsilon(1e-12));
    CHECK(mass(r, 0.5) == doctest::Approx(mass(u, 0.5)).epsilon(1e-12));
    CHECK(std::abs(momentum(r, 0.5) - momentum(u, 0.5)) < 1e-12);
  }
  CHECK(std::abs(momentum(rotated(black_soliton(g), 1.3), 0.7)) < 1e-13);
}

TEST_CASE("momentum is real for random fields") {
  const auto g = Grid::create(5.0, 50);
  std::mt19937 rng(11);
  std::normal_distribution<double> n;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<cplx> v(g.size());
    for (auto& x : v) x = cplx(n(rng), n(rng));
    CHECK_NOTHROW(momentum(ComplexField(g, v), 0.8));
  }
}

TEST_CASE("perturbation forms vanish at v = 0") {
  const auto g = Grid::create(20.0, 200);
  const auto p = conserved_perturbation(ComplexField(g), 0.5);
  CHECK(p.energy == 0.0);
  CHECK(p.momentum == 0.0);
  CHECK(p.mass == 0.0);
}

TEST_CASE("perturbation forms match full-field differences") {
  const auto g = Grid::create(20.0, 400);
  const auto phi = stationary_black_soliton(g);
  const ComplexField base(g, std::vector<cplx>(phi.begin(), phi.end()));
  for (unsigned seed : {1u, 2u, 3u}) {
    for (double eps : {0.0, 0.5, 1.0}) {
      CAPTURE(seed);
      CAPTURE(eps);
      const auto v = bump(g, seed);
      std::vector<cplx> sum(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) sum[i] = phi[i] + v[i];
      const ComplexField u(g, sum);
      const auto p = conserved_perturbation(v, eps, phi);
      CHECK(std::abs(p.energy - (energy(u) - energy(base))) < 1e-11);
      CHECK(std::abs(p.momentum - (momentum(u, eps) - momentum(base, eps))) < 1e-11);
      CHECK(std::abs(p.mass - (mass(u, eps) - mass(base, eps))) < 1e-11);
    }
  }
}

TEST_CASE("monitor log along a run") {
  auto cfg = *preset("fig3");
  cfg.t_final = 5.0;
  const auto u0 = initial_condition(cfg.grid, cfg.amp);
  ConservationMonitor mon(cfg.eps, u0);
  run(cfg, u0, mon.observer());
  const auto& log = mon.log();
  CHECK(log.times.size() == static_cast<std::size_t>(cfg.step_count() + 1));
  CHECK(ConservedLog::drift(log.energy, 0) == 0.0);
  CHECK(log.wall_flux.front() == 0.0);
  for (double e : log.energy) CHECK(std::isfinite(e));
  CHECK(ConservedLog::max_relative_drift(log.energy) < 1e-6);
  CHECK(ConservedLog::max_relative_drift(log.mass) < 1e-9);
  CHECK(log.max_momentum_balance_residual() <= ConservedLog::max_relative_drift(log.momentum) * (1 + 1e-6));
}

TEST_CASE("wall flux of a stationary state is negligible") {
  const auto g = Grid::create(20.0, 400);
  const auto u = black_soliton(g);
  CHECK(std::abs(wall_momentum_flux(u, u, 0.05)) < 1e-15);
}

TEST_CASE("snapshot log") {
  auto cfg = *preset("fig2");
  cfg.t_final = 0.5;
  const auto traj = run(cfg);
  const auto log = conserved_log(traj);
  CHECK(log.times == traj.times);
  for (double f : log.wall_flux) CHECK(f == 0.0);
}
