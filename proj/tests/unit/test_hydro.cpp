#include <cmath>
#include <numbers>

#include "doctest.h"
#include "eplab/diagnostics.hpp"
#include "eplab/errors.hpp"
#include "eplab/hydro.hpp"

using namespace eplab;
constexpr double pi = std::numbers::pi;

namespace {

RadialState ball(Physics phys, double R, double r_max, std::size_t cells) {
  auto s = make_state(phys, r_max, cells);
  for (std::size_t i = 0; i < cells; ++i) {
    if (s.grid.center(i) < R) s.rho[i] = 1.0;
  }
  s.reset_floor();
  return s;
}

}  // namespace

TEST_CASE("enum names round-trip") {
  for (auto r : {Reconstruction::first_order, Reconstruction::muscl}) {
    CHECK(parse_reconstruction(to_string(r)) == r);
  }
  for (auto l : {Limiter::minmod, Limiter::mc}) CHECK(parse_limiter(to_string(l)) == l);
  CHECK_THROWS_AS(parse_reconstruction("weno"), InvalidInput);
  CHECK_THROWS_AS(parse_limiter("superbee"), InvalidInput);
  CHECK(to_string(Termination::support_hit_boundary) == "support_hit_boundary");
}

TEST_CASE("damping alone decays velocity as exp(-beta t)") {
  Physics phys;
  phys.beta = 1.5;
  auto s = ball(phys, 1.0, 2.0, 256);
  const double eps = 1e-7;
  for (std::size_t i = 0; i < s.size(); ++i) s.u[i] = eps * s.grid.center(i);
  HydroOptions opts;
  opts.gravity = false;
  opts.pressure = false;
  const double dt = 1e-3;
  for (int k = 0; k < 1000; ++k) s = step(s, dt, opts);
  for (std::size_t i : {5u, 60u, 120u}) {
    CHECK(s.u[i] / (eps * s.grid.center(i)) == doctest::Approx(std::exp(-1.5)).epsilon(1e-5));
  }
}

TEST_CASE("cold dust at rest without gravity stays at rest") {
  auto s = ball(Physics{}, 1.0, 2.0, 128);
  HydroOptions opts;
  opts.gravity = false;
  opts.pressure = false;
  const auto s0 = s;
  for (int k = 0; k < 50; ++k) s = step(s, 1e-2, opts);
  CHECK(s.rho == s0.rho);
  for (double u : s.u) CHECK(u == 0.0);
}

TEST_CASE("finite volume update conserves mass") {
  Physics phys;
  phys.K = 0.1;
  auto s = ball(phys, 0.5, 2.0, 512);
  const double M0 = total_mass(s);
  EvolveOptions opts;
  opts.t_end = 0.2;
  opts.snapshot_every = 0.05;
  const auto res = evolve(s, opts);
  REQUIRE(res.termination == Termination::reached_t_end);
  CHECK(std::abs(total_mass(res.final.state) - M0) <= 1e-12 * M0 + res.clamped_mass);
  REQUIRE(res.snapshots.size() == 5);
  for (std::size_t k = 0; k < res.snapshots.size(); ++k) {
    CHECK(res.snapshots[k].state.t == doctest::Approx(0.05 * k).epsilon(1e-14));
  }
  CHECK(res.final.state.t == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("time step above the stability limit is rejected") {
  auto s = ball(Physics{}, 0.5, 2.0, 128);
  const double dt = max_stable_dt(s);
  CHECK(dt > 0.0);
  CHECK_NOTHROW(step(s, dt));
  CHECK_THROWS_AS(step(s, 2.0 * dt), InvalidInput);
}

TEST_CASE("support reaching the outer edge is reported") {
  auto s = ball(Physics{}, 1.99, 2.0, 128);
  CHECK_THROWS_AS(step(s, 0.5 * max_stable_dt(s)), SupportHitBoundary);
  EvolveOptions opts;
  opts.t_end = 0.1;
  opts.snapshot_every = 0.05;
  const auto res = evolve(s, opts);
  CHECK(res.termination == Termination::support_hit_boundary);
}

TEST_CASE("pressureless ball collapses near the free-fall time") {
  auto s = ball(Physics{}, 1.0, 2.0, 512);
  EvolveOptions opts;
  opts.t_end = 1.0;
  opts.snapshot_every = 0.1;
  opts.collapse_factor = 30.0;
  opts.hydro.pressure = false;
  const auto res = evolve(s, opts);
  const double t_ff = std::sqrt(3.0 * pi / 32.0);
  CHECK(res.termination == Termination::collapse_indicator);
  CHECK(res.final.state.t < t_ff);
  CHECK(res.final.state.t > 0.8 * t_ff);
}

TEST_CASE("hydrostatic residual of a uniform state is the gravity term") {
  Physics phys;
  auto s = make_state(phys, 1.0, 64);
  for (auto& r : s.rho) r = 1.0;
  s.reset_floor();
  const auto g = gravity_acceleration(s);
  CHECK(hydrostatic_residual(s) == doctest::Approx(g[s.size() - 2]).epsilon(1e-12));
  CHECK(pressure_gradient_scale(s) == 0.0);
}
