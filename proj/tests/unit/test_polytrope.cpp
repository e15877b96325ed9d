#include <cmath>
#include <numbers>

#include "doctest.h"
#include "eplab/errors.hpp"
#include "eplab/polytrope.hpp"

using namespace eplab;
constexpr double pi = std::numbers::pi;

namespace {

double sample_at(const PolytropeProfile& p, double z) {
  for (const auto& s : p.samples) {
    if (std::abs(s.z - z) < 1e-9) return s.y;
  }
  FAIL("no sample at z = " << z);
  return 0.0;
}

}  // namespace

TEST_CASE("closed-form Lane-Emden indices") {
  const auto p0 = solve_lane_emden(0.0, 1.0, 10.0, 1e-3);
  REQUIRE(p0.first_zero);
  CHECK(*p0.first_zero == doctest::Approx(std::sqrt(6.0)).epsilon(1e-11));

  const auto p1 = solve_lane_emden(1.0, 1.0, 10.0, 1e-4);
  REQUIRE(p1.first_zero);
  CHECK(*p1.first_zero == doctest::Approx(pi).epsilon(1e-11));
  const auto zp = refine_first_zero(p1);
  REQUIRE(zp);
  CHECK(zp->dy == doctest::Approx(-1.0 / pi).epsilon(1e-9));
  CHECK(density_ratio(p1) == doctest::Approx(3.0 / (pi * pi)).epsilon(1e-9));
  for (double z : {0.5, 1.0, 2.0, 3.0}) {
    CHECK(sample_at(p1, z) == doctest::Approx(std::sin(z) / z).epsilon(1e-11));
  }

  IntegrationOptions opts;
  opts.z_max = 40.0;
  opts.h = 1e-3;
  const auto p5 = solve_lane_emden(5.0, 1.0, opts);
  CHECK_FALSE(p5.first_zero);
  for (double z : {1.0, 5.0, 20.0, 40.0}) {
    CHECK(sample_at(p5, z) == doctest::Approx(1.0 / std::sqrt(1.0 + z * z / 3.0)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(density_ratio(p5), InvalidInput);
}

TEST_CASE("tabulated zeros") {
  const auto p15 = solve_lane_emden(1.5, 1.0, 10.0, 1e-4);
  REQUIRE(p15.first_zero);
  CHECK(*p15.first_zero == doctest::Approx(3.65375374).epsilon(1e-8));
  const auto p3 = solve_lane_emden(3.0, 1.0, 10.0, 1e-4);
  REQUIRE(p3.first_zero);
  CHECK(*p3.first_zero == doctest::Approx(6.89684862).epsilon(1e-8));
  CHECK(1.0 / density_ratio(p3) == doctest::Approx(54.1825).epsilon(1e-5));
}

TEST_CASE("RK4 converges at fourth order") {
  for (double n : {1.0, 5.0}) {
    const auto exact = [n](double z) {
      return n == 1.0 ? std::sin(z) / z : 1.0 / std::sqrt(1.0 + z * z / 3.0);
    };
    const double e1 = std::abs(sample_at(solve_lane_emden(n, 1.0, 2.5, 0.02), 2.0) - exact(2.0));
    const double e2 = std::abs(sample_at(solve_lane_emden(n, 1.0, 2.5, 0.01), 2.0) - exact(2.0));
    CAPTURE(n);
    CHECK(std::log2(e1 / e2) == doctest::Approx(4.0).epsilon(0.1));
  }
}

TEST_CASE("power profile in three dimensions reduces to n = 3") {
  IntegrationOptions opts;
  opts.z_max = 10.0;
  const auto p = solve_generalized_profile(ProfileKind::power, 3, pi, 0.0, 1.0, opts);
  REQUIRE(p.first_zero);
  CHECK(*p.first_zero == doctest::Approx(6.89684862).epsilon(1e-8));
  CHECK(power_coefficient(3, pi) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("isothermal disc matches the Liouville solution") {
  IntegrationOptions opts;
  opts.z_max = 20.0;
  opts.h = 1e-3;
  const auto p = solve_generalized_profile(ProfileKind::isothermal2d, 2, 2.0 * pi, 0.0, 0.0, opts);
  CHECK_FALSE(p.first_zero);
  const ProfileInterpolant interp(p);
  for (double z : {0.5, 2.0, 7.0, 19.0}) {
    CHECK(interp.value(z).y == doctest::Approx(-2.0 * std::log1p(z * z / 8.0)).epsilon(1e-9));
    const double enclosed = (z * z / 2.0) / (1.0 + z * z / 8.0);
    CHECK(interp.enclosed(z) == doctest::Approx(enclosed).epsilon(1e-7));
  }
}

TEST_CASE("six-fifths closed form") {
  CHECK(stationary_density_6_5(2.0 * pi / 3.0, 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(stationary_density_6_5(2.0 * pi / 3.0, 1.0, 1.0) ==
        doctest::Approx(std::pow(2.0, -2.5)).epsilon(1e-14));
}

TEST_CASE("profile input validation") {
  CHECK_THROWS_AS(solve_lane_emden(-1.0, 1.0, 10.0), InvalidInput);
  CHECK_THROWS_AS(solve_lane_emden(1.0, 0.0, 10.0), InvalidInput);
  CHECK_THROWS_AS(solve_lane_emden(1.0, 1.0, 10.0, 0.0), InvalidInput);
  CHECK_THROWS_AS(solve_lane_emden(1.0, 1.0, 1e-5, 1e-4), InvalidInput);
  IntegrationOptions opts;
  CHECK_THROWS_AS(solve_generalized_profile(ProfileKind::power, 2, 1.0, 0.0, 1.0, opts),
                  InvalidInput);
  CHECK_THROWS_AS(solve_generalized_profile(ProfileKind::classic, 3, 1.0, 0.0, 1.0, opts),
                  InvalidInput);
  CHECK_THROWS_AS(solve_generalized_profile(ProfileKind::isothermal2d, 3, 1.0, 0.0, 1.0, opts),
                  InvalidInput);
  CHECK_THROWS_AS(parse_profile_kind("spherical"), InvalidInput);
  CHECK(parse_profile_kind("isothermal2d") == ProfileKind::isothermal2d);
}

TEST_CASE("interpolation beyond the zero reports zero") {
  const auto p1 = solve_lane_emden(1.0, 1.0, 10.0, 1e-3);
  CHECK(interpolate_profile(p1, 5.0).y == 0.0);
  CHECK(profile_to_density(p1, 2.0, 4.0) == doctest::Approx(std::sin(2.0) / 2.0 / 8.0).epsilon(1e-9));
  CHECK(profile_to_density(p1, 1.0, 1.0) == doctest::Approx(std::sin(1.0)).epsilon(1e-9));
  CHECK(profile_to_density(p1, 1.0, 4.0) == 0.0);
  const auto p5 = solve_lane_emden(5.0, 1.0, 10.0, 1e-3);
  CHECK_THROWS_AS(interpolate_profile(p5, 11.0), InvalidInput);
}
