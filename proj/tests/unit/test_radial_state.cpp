#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "eplab/errors.hpp"
#include "eplab/radial_state.hpp"

using namespace eplab;
constexpr double pi = std::numbers::pi;

namespace {

RadialState uniform_ball(int N, double rho0, double R, double r_max, std::size_t cells) {
  Physics phys;
  phys.N = N;
  auto s = make_state(phys, r_max, cells);
  for (std::size_t i = 0; i < cells; ++i) {
    if (s.grid.center(i) < R) s.rho[i] = rho0;
  }
  s.reset_floor();
  return s;
}

}  // namespace

TEST_CASE("grid geometry") {
  const RadialGrid g(3, 2.0, 100);
  CHECK(g.dr() == doctest::Approx(0.02));
  CHECK(g.center(0) == doctest::Approx(0.01));
  CHECK(g.face(100) == doctest::Approx(2.0));
  double total = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) total += g.volume(i);
  CHECK(total == doctest::Approx(8.0 / 3.0).epsilon(1e-13));
  CHECK(g.area(50) == doctest::Approx(1.0));
  CHECK(g.volume(0) == doctest::Approx(std::pow(0.02, 3) / 3.0));

  CHECK_THROWS_AS(RadialGrid(3, 0.0, 100), InvalidInput);
  CHECK_THROWS_AS(RadialGrid(3, 1.0, 3), InvalidInput);
  CHECK_THROWS_AS(RadialGrid(0, 1.0, 100), InvalidInput);
}

TEST_CASE("uniform ball gravity in three dimensions") {
  const double rho0 = 2.0;
  const auto s = uniform_ball(3, rho0, 1.0, 2.0, 2000);
  const auto grav = poisson_radial(s);
  const double M = 4.0 * pi / 3.0 * rho0;
  for (std::size_t i : {0u, 100u, 499u, 999u}) {
    const double r = s.grid.center(i);
    CHECK(grav.phi_r[i] == doctest::Approx(4.0 * pi * rho0 * r / 3.0).epsilon(1e-12));
    CHECK(grav.phi[i] ==
          doctest::Approx(-2.0 * pi * rho0 * (1.0 - r * r / 3.0)).epsilon(1e-5));
  }
  for (std::size_t i : {1000u, 1500u, 1999u}) {
    const double r = s.grid.center(i);
    CHECK(grav.phi_r[i] == doctest::Approx(M / (r * r)).epsilon(1e-12));
    CHECK(grav.phi[i] == doctest::Approx(-M / r).epsilon(1e-12));
  }
  const auto acc = gravity_acceleration(s);
  CHECK(acc == grav.phi_r);
  CHECK(support_radius(s) == doctest::Approx(s.grid.center(999)));
}

TEST_CASE("uniform disc gravity in two dimensions") {
  const auto s = uniform_ball(2, 1.0, 1.0, 3.0, 3000);
  const auto grav = poisson_radial(s);
  const double M = pi;
  for (std::size_t i : {10u, 500u, 999u}) {
    const double r = s.grid.center(i);
    CHECK(grav.phi_r[i] == doctest::Approx(pi * r).epsilon(1e-12));
  }
  for (std::size_t i : {1000u, 2000u, 2999u}) {
    const double r = s.grid.center(i);
    CHECK(grav.phi_r[i] == doctest::Approx(M / r).epsilon(1e-12));
    CHECK(grav.phi[i] == doctest::Approx(M * std::log(r)).epsilon(1e-12));
  }
  const auto I = enclosed_integral(s);
  CHECK(I.back() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("physics and state validation") {
  Physics p;
  CHECK_NOTHROW(validate(p));
  p.N = 1;
  CHECK_THROWS_AS(validate(p), InvalidInput);
  p = Physics{};
  p.gamma = 0.9;
  CHECK_THROWS_AS(validate(p), InvalidInput);
  p = Physics{};
  p.K = 0.0;
  CHECK_THROWS_AS(validate(p), InvalidInput);
  p = Physics{};
  p.g = -1.0;
  CHECK_THROWS_AS(validate(p), InvalidInput);
  p = Physics{};
  p.beta = -0.1;
  CHECK_THROWS_AS(validate(p), InvalidInput);

  auto s = make_state(Physics{}, 1.0, 16);
  CHECK_NOTHROW(validate(s));
  s.rho[3] = -1.0;
  CHECK_THROWS_AS(validate(s), InvalidInput);
  s.rho[3] = 0.0;
  s.u[2] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(validate(s), InvalidInput);
  s.u[2] = 0.0;
  s.rho.pop_back();
  CHECK_THROWS_AS(validate(s), InvalidInput);
}

TEST_CASE("equation of state") {
  Physics p;
  p.gamma = 2.0;
  p.K = 0.5;
  CHECK(p.pressure(3.0) == doctest::Approx(4.5));
  CHECK(p.sound_speed(3.0) == doctest::Approx(std::sqrt(2.0 * 0.5 * 3.0)));
  p.gamma = 1.0;
  CHECK(p.pressure(3.0) == doctest::Approx(1.5));
  CHECK(p.sound_speed(3.0) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("vacuum state has no support") {
  const auto s = make_state(Physics{}, 1.0, 32);
  CHECK(support_radius(s) == 0.0);
  CHECK(s.max_density() == 0.0);
}
