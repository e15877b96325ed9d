#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "eplab/diagnostics.hpp"
#include "eplab/errors.hpp"

using namespace eplab;
constexpr double pi = std::numbers::pi;

namespace {

RadialState uniform_ball(int N, double gamma, double K, double rho0, double R, double r_max,
                         std::size_t cells) {
  Physics phys;
  phys.N = N;
  phys.gamma = gamma;
  phys.K = K;
  auto s = make_state(phys, r_max, cells);
  for (std::size_t i = 0; i < cells; ++i) {
    if (s.grid.center(i) < R) s.rho[i] = rho0;
  }
  s.reset_floor();
  return s;
}

}  // namespace

TEST_CASE("potential energy of uniform balls") {
  {
    const auto s = uniform_ball(3, 5.0 / 3.0, 1.0, 1.0, 1.0, 2.0, 400);
    const double M = total_mass(s);
    CHECK(M == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-13));
    CHECK(potential_energy(s) == doctest::Approx(-0.6 * M * M).epsilon(1e-10));
  }
  {
    const auto s = uniform_ball(2, 2.0, 1.0, 1.0, 1.5, 2.0, 400);
    const double M = total_mass(s);
    CHECK(M == doctest::Approx(pi * 2.25).epsilon(1e-13));
    CHECK(potential_energy(s) ==
          doctest::Approx(0.5 * M * M * (std::log(1.5) - 0.25)).epsilon(1e-10));
  }
  {
    const auto s = uniform_ball(4, 1.4, 1.0, 2.0, 0.5, 2.0, 400);
    const double M = total_mass(s);
    CHECK(M == doctest::Approx(2.0 * pi * pi / 2.0 * std::pow(0.5, 4)).epsilon(1e-13));
    CHECK(potential_energy(s) == doctest::Approx(-(2.0 / 3.0) * M * M / 0.25).epsilon(1e-10));
  }
}

TEST_CASE("energy breakdown of a moving ball") {
  auto s = uniform_ball(3, 2.0, 0.5, 1.0, 1.0, 2.0, 200);
  for (std::size_t i = 0; i < s.size(); ++i) s.u[i] = 2.0;
  const double vol = 4.0 * pi / 3.0;
  const auto e = energy(s);
  CHECK(e.kinetic == doctest::Approx(2.0 * vol).epsilon(1e-12));
  CHECK(e.internal == doctest::Approx(0.5 * vol).epsilon(1e-12));
  CHECK(e.potential == doctest::Approx(-0.6 * vol * vol).epsilon(1e-10));
  CHECK(e.total == doctest::Approx(e.kinetic + e.internal + e.potential));
  CHECK(e.scale() == doctest::Approx(std::abs(e.potential)));

  auto iso = uniform_ball(3, 1.0, 0.5, std::exp(1.0), 1.0, 2.0, 200);
  CHECK(energy(iso).internal == doctest::Approx(0.5 * std::exp(1.0) * vol).epsilon(1e-12));
}

TEST_CASE("virial formulas for a static ball") {
  const auto s = uniform_ball(3, 2.0, 0.5, 1.0, 1.0, 2.0, 200);
  const auto v = virial_sample(s);
  const double vol = 4.0 * pi / 3.0;
  CHECK(v.H == doctest::Approx(4.0 * pi / 5.0).epsilon(1e-4));
  CHECK(v.Hdot_formula == 0.0);
  const double W = -0.6 * vol * vol;
  CHECK(v.Hddot_formula == doctest::Approx(2.0 * 3.0 * 0.5 * vol + 2.0 * W).epsilon(1e-10));

  const auto d = uniform_ball(2, 2.0, 0.5, 1.0, 1.0, 2.0, 200);
  const double M = pi;
  CHECK(virial_sample(d).Hddot_formula == doctest::Approx(2.0 * 2.0 * 0.5 * pi - M * M).epsilon(1e-10));
}

TEST_CASE("virial series differences are exact on quadratics") {
  std::vector<VirialSample> s;
  for (int k = 0; k < 6; ++k) {
    VirialSample v;
    v.t = 0.5 + 0.25 * k;
    v.H = 1.0 + 2.0 * v.t + 3.0 * v.t * v.t;
    s.push_back(v);
  }
  const auto out = virial_series(s);
  for (const auto& v : out) {
    CHECK(v.measured);
    CHECK(v.Hdot_measured == doctest::Approx(2.0 + 6.0 * v.t).epsilon(1e-12));
    CHECK(v.Hddot_measured == doctest::Approx(6.0).epsilon(1e-10));
  }
  auto uneven = s;
  uneven[2].t += 0.01;
  CHECK_THROWS_AS(virial_series(uneven), InvalidInput);
  s.resize(2);
  CHECK_THROWS_AS(virial_series(s), InvalidInput);
}

TEST_CASE("gap functional and two-dimensional identity") {
  auto d = uniform_ball(2, 2.0, 0.5, 1.0, 1.0, 2.0, 200);
  CHECK(gap_functional(d) == doctest::Approx(2.0 * pi).epsilon(1e-12));
  for (std::size_t i = 0; i < d.size(); ++i) d.u[i] = 1.0;
  CHECK(gap_functional(d) == doctest::Approx(4.0 * pi).epsilon(1e-12));

  const auto rep = stationary_identities(d);
  CHECK(rep.lhs == doctest::Approx(0.5 * pi).epsilon(1e-12));
  CHECK(rep.rhs == doctest::Approx(pi * pi / 4.0).epsilon(1e-12));
  CHECK(rep.moving);
  CHECK(rep.max_speed == 1.0);
  CHECK(rep.mismatch == doctest::Approx(std::abs(0.5 * pi - pi * pi / 4.0) / (pi * pi / 4.0)));
}

TEST_CASE("gravity field size is checked") {
  const auto s = uniform_ball(3, 2.0, 0.5, 1.0, 1.0, 2.0, 64);
  GravityField bad;
  bad.phi_r.resize(10);
  bad.phi.resize(10);
  CHECK_THROWS_AS(energy(s, bad), InvalidInput);
  CHECK_THROWS_AS(virial_sample(s, bad), InvalidInput);
}
