#include <cmath>
#include <numbers>

#include "doctest.h"
#include "eplab/errors.hpp"
#include "eplab/scale_factor.hpp"

using namespace eplab;
constexpr double pi = std::numbers::pi;

namespace {

struct Case {
  int N;
  double lambda;
  double a0;
  double a1;
  double T;
};

}  // namespace

TEST_CASE("collapse times against closed forms") {
  // N = 2, a1 = 0: T = a0 sqrt(pi / (2 lambda)).
  // N = 3, a1 = 0: T = (pi / 2) sqrt(a0^3 / (2 lambda)).
  // N = 4: a^2 is quadratic in t with curvature 4e.
  const Case cases[] = {
      {2, 1.0, 1.0, 0.0, std::sqrt(pi / 2.0)},
      {2, 0.5, 2.0, 0.0, 2.0 * std::sqrt(pi)},
      {3, 1.0, 1.0, 0.0, pi / (2.0 * std::sqrt(2.0))},
      {3, 2.0, 1.5, 0.0, 0.5 * pi * std::sqrt(1.5 * 1.5 * 1.5 / 4.0)},
      {4, 1.0, 1.0, -0.5, 2.0 / 3.0},
      {4, 1.0, 1.0, 0.5, 2.0},
      {3, 0.0, 1.0, -0.5, 2.0},
      {2, 0.0, 2.0, -1.0, 2.0},
  };
  for (const auto& c : cases) {
    CAPTURE(c.N);
    CAPTURE(c.lambda);
    CAPTURE(c.a1);
    const auto traj = integrate_scale(c.N, c.lambda, c.a0, c.a1, 2.0 * c.T, 1e-2);
    const auto T = blowup_time(traj);
    REQUIRE(T);
    CHECK(*T == doctest::Approx(c.T).epsilon(1e-7));
    CHECK(traj.max_drift_away_from_collapse <= 1e-8 * std::max(1.0, std::abs(traj.first_integral)));
    const auto Tq = collapse_time_by_quadrature(c.N, c.lambda, c.a0, c.a1);
    REQUIRE(Tq);
    CHECK(*Tq == doctest::Approx(c.T).epsilon(1e-9));
  }
}

TEST_CASE("four-dimensional trajectory follows a^2 = a0^2 + 2 a0 a1 t + 2 e t^2") {
  const double a0 = 1.0, a1 = 0.5, lambda = 1.0;
  const double e = 0.5 * a1 * a1 - 0.5 * lambda / (a0 * a0);
  const auto traj = integrate_scale(4, lambda, a0, a1, 1.5, 1e-2);
  for (double t : {0.1, 0.73, 1.2, 1.5}) {
    const double a2 = a0 * a0 + 2.0 * a0 * a1 * t + 2.0 * e * t * t;
    CHECK(traj.at(t).a == doctest::Approx(std::sqrt(a2)).epsilon(1e-8));
  }
  CHECK(traj.energy(traj.samples.back()) == doctest::Approx(e).epsilon(1e-9));
}

TEST_CASE("escaping and coasting trajectories do not collapse") {
  const auto esc = integrate_scale(3, 1.0, 1.0, 2.0, 5.0, 1e-2);
  CHECK_FALSE(blowup_time(esc));
  CHECK(esc.t_last() == doctest::Approx(5.0));
  CHECK_FALSE(collapse_time_by_quadrature(3, 1.0, 1.0, 2.0));
  CHECK_FALSE(collapse_time_by_quadrature(3, 0.0, 1.0, 0.0));
  CHECK_FALSE(collapse_time_by_quadrature(3, 0.0, 1.0, 0.3));
  const auto coast = integrate_scale(3, 0.0, 1.0, 0.3, 2.0, 1e-2);
  CHECK(coast.at(2.0).a == doctest::Approx(1.6).epsilon(1e-12));
}

TEST_CASE("sample spacing respects dt") {
  const auto traj = integrate_scale(3, 1.0, 1.0, 0.0, 1.0, 0.05);
  for (std::size_t i = 1; i < traj.samples.size(); ++i) {
    CHECK(traj.samples[i].t - traj.samples[i - 1].t <= 0.05 + 1e-12);
  }
}

TEST_CASE("scale factor input validation") {
  CHECK_THROWS_AS(integrate_scale(3, 1.0, 0.0, 0.0, 1.0, 0.1), InvalidInput);
  CHECK_THROWS_AS(integrate_scale(3, 1.0, -1.0, 0.0, 1.0, 0.1), InvalidInput);
  CHECK_THROWS_AS(integrate_scale(1, 1.0, 1.0, 0.0, 1.0, 0.1), InvalidInput);
  CHECK_THROWS_AS(integrate_scale(3, 1.0, 1.0, 0.0, 1.0, 0.0), InvalidInput);
  CHECK_THROWS_AS(integrate_scale(3, 1.0, 1.0, 0.0, 0.0, 0.1), InvalidInput);
  CHECK_THROWS_AS(collapse_time_by_quadrature(3, 1.0, 0.0, 0.0), InvalidInput);
  const auto traj = integrate_scale(3, 0.0, 1.0, 0.0, 1.0, 0.1);
  CHECK_THROWS_AS(traj.at(2.0), InvalidInput);
}
