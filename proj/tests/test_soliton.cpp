#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rnls/soliton.hpp"

using namespace rnls;

TEST_CASE("threshold constants from closed forms") {
  const auto& c = ThresholdConstants::get();
  CHECK(c.eps0 == doctest::Approx(0.8891).epsilon(1e-4));
  CHECK(c.mu0 == doctest::Approx(0.5534).epsilon(1e-4));
  CHECK(c.mu1 == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(std::abs(mu_to_eps(c.mu0) - c.eps0) < 1e-12);
}

TEST_CASE("black soliton samples") {
  const auto g = Grid::create(10.0, 200);
  const auto u = black_soliton(g);
  CHECK(u[g.center()] == cplx(0.0, 0.0));
  CHECK(std::abs(u[g.size() - 1].real() - 1.0) < 1e-8);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(u[i] == -u[g.mirror(i)]);
}

TEST_CASE("dark soliton") {
  CHECK(std::abs(dark_soliton(0.0, 0.0, 0.7) - std::tanh(0.7)) < 1e-15);
  const cplx z = dark_soliton(0.6, 0.0, 0.0);
  CHECK(std::abs(z - cplx(0.0, 0.6)) < 1e-15);
  for (double c : {-0.9, -0.3, 0.2, 0.75}) {
    for (double t : {0.0, 0.4, 3.0}) {
      for (double x : {-2.0, 0.1, 1.5}) {
        const double g = std::sqrt(1 - c * c);
        const double s = oracles::sech2(g * (x - 2 * c * t));
        CHECK(std::norm(dark_soliton(c, t, x)) + (1 - c * c) * s == doctest::Approx(1.0).epsilon(1e-14));
      }
    }
  }
  CHECK_THROWS_AS(DarkSoliton(1.0), InvalidArgument);
  CHECK_THROWS_AS(DarkSoliton(-1.2), InvalidArgument);
  const DarkSoliton d(0.6);
  CHECK(d.amplitude() == doctest::Approx(0.8));
}

TEST_CASE("mu and eps transforms") {
  CHECK(mu_to_eps(0.0) == 0.0);
  CHECK(mu_to_eps(0.5534) == doctest::Approx(0.8891).epsilon(5e-4));
  CHECK(std::abs(eps_to_mu(mu_to_eps(0.3)) - 0.3) < 1e-14);
  CHECK_THROWS_AS(mu_to_eps(1.0 / std::sqrt(2.0)), InvalidArgument);
  CHECK_THROWS_AS(mu_to_eps(-0.1), InvalidArgument);
  double prev = -1.0;
  for (double lm = -6.0; lm < std::log10(0.7071); lm += 0.05) {
    const double mu = std::pow(10.0, lm);
    const double e = mu_to_eps(mu);
    CHECK(e > prev);
    prev = e;
    CHECK(std::abs(eps_to_mu(e) - mu) <= 1e-14 * std::max(1.0, mu));
  }
  const auto p = ModelParams::from_mu(0.3);
  CHECK(p.eps == doctest::Approx(0.3 / std::sqrt(1 - 0.18)));
}

TEST_CASE("dispersion relation") {
  CHECK(dispersion_omega(0.0, 0.7) == 0.0);
  CHECK(dispersion_omega(1.0, 1.0) == doctest::Approx(0.5));
  CHECK(dispersion_omega(1e6, 0.5) == doctest::Approx(4.0).epsilon(1e-9));
  for (double k : {0.1, 1.0, 10.0, 1e3}) CHECK(dispersion_omega(k, 0.5) < 4.0);
  CHECK_THROWS_AS(dispersion_omega(1.0, 0.0), InvalidArgument);
}

TEST_CASE("V_phi profile") {
  CHECK(v_phi_profile(0.0, 0.0) == doctest::Approx(-0.5));
  CHECK(std::abs(v_phi_profile(1.0, 0.0)) < 1e-15);
  for (double x : {0.3, 1.7, 5.0}) CHECK(v_phi_profile(0.7, x) == v_phi_profile(0.7, -x));
}

TEST_CASE("pairing closed form") {
  CHECK(pairing_phi_vphi(0.0) == -1.0);
  CHECK(pairing_phi_vphi(1.0) == doctest::Approx(0.6));
  CHECK(std::abs(pairing_phi_vphi(std::pow(5.0 / 8.0, 0.25))) < 1e-15);
  CHECK(std::abs(pairing_root() - std::pow(5.0 / 8.0, 0.25)) < 1e-12);
}

TEST_CASE("pairing matches quadrature of the weighted inner product") {
  const double eps0 = std::pow(5.0 / 8.0, 0.25);
  for (double eps : {0.0, 0.25, 0.5, eps0, 1.0, 1.5}) {
    CAPTURE(eps);
    const double q = oracles::pairing_quadrature(eps, [eps](double x) { return v_phi_profile(eps, x); });
    CHECK(std::abs(q - pairing_phi_vphi(eps)) < 1e-8);
  }
}

TEST_CASE("discrete stationary soliton") {
  const auto g = Grid::create(20.0, 400);
  const auto phi = stationary_black_soliton(g);
  const auto a = build_neumann_laplacian(g);
  const auto lap = a.apply(phi);
  double r = 0.0, d = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    r = std::max(r, std::abs(lap[i] + 2.0 * (1.0 - phi[i] * phi[i]) * phi[i]));
    d = std::max(d, std::abs(phi[i] - std::tanh(g.node(i))));
    CHECK(phi[i] == -phi[g.mirror(i)]);
  }
  CHECK(r < 1e-9);
  CHECK(d < 0.05 * 0.05);
  CHECK(d > 0.0);
}
