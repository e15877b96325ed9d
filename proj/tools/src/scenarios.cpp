#include "eplab_tools/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eplab/errors.hpp"
#include "eplab/family.hpp"
#include "eplab/io.hpp"
#include "eplab/polytrope.hpp"

namespace eplab::tools {

namespace {

void apply_velocity(RadialState& state, double slope) {
  for (std::size_t i = 0; i < state.size(); ++i) {
    state.u[i] = state.rho[i] > 0.0 ? slope * state.grid.center(i) : 0.0;
  }
}

double polytropic_index(double gamma) {
  if (!(gamma > 1.2)) throw InvalidInput("polytrope star requires gamma > 6/5");
  return 1.0 / (gamma - 1.0);
}

double surface_span(double n) { return n < 4.0 ? 20.0 : 400.0; }

ProfileInterpolant lane_emden_profile(double n) {
  return ProfileInterpolant(solve_lane_emden(n, 1.0, IntegrationOptions{surface_span(n), 1e-4, 1}));
}

}  // namespace

double polytrope_constant_for_radius(double gamma, double rho_c, double R, double g) {
  const double n = polytropic_index(gamma);
  const auto xi1 = first_zero(solve_lane_emden(n, 1.0, IntegrationOptions{surface_span(n), 1e-4, 1000}));
  if (!xi1) throw NumericalFailure("polytrope star: no surface found");
  const double rn = R / *xi1;
  return 4.0 * std::numbers::pi * g * rn * rn * std::pow(rho_c, 1.0 - 1.0 / n) / (n + 1.0);
}

RadialState polytrope_star(const Physics& phys, double rho_c, double r_max, std::size_t cells,
                           double velocity_slope) {
  if (phys.N != 3) throw InvalidInput("polytrope star requires N = 3");
  const double n = polytropic_index(phys.gamma);
  const ProfileInterpolant prof = lane_emden_profile(n);
  const double rn = std::sqrt((n + 1.0) * phys.K * std::pow(rho_c, 1.0 / n - 1.0) /
                              (4.0 * std::numbers::pi * phys.g));
  if (!(rn * *prof.support_edge() < r_max)) {
    throw InvalidInput("polytrope star radius " + std::to_string(rn * *prof.support_edge()) +
                       " does not fit inside r_max");
  }
  RadialState state = make_state(phys, r_max, cells);
  for (std::size_t i = 0; i < cells; ++i) {
    state.rho[i] = rho_c * prof.shape(state.grid.center(i) / rn);
  }
  apply_velocity(state, velocity_slope);
  state.reset_floor();
  return state;
}

RadialState stationary65_state(const Physics& phys, double A, double truncate, double r_max,
                               std::size_t cells) {
  RadialState state = make_state(phys, r_max, cells);
  for (std::size_t i = 0; i < cells; ++i) {
    const double r = state.grid.center(i);
    state.rho[i] = r < truncate ? stationary_density_6_5(phys.K, A, r) : 0.0;
  }
  state.reset_floor();
  return state;
}

RadialState concentrated_state(const Physics& phys, double rho_c, double core_radius,
                               double truncate, double r_max, std::size_t cells,
                               double velocity_slope) {
  RadialState state = make_state(phys, r_max, cells);
  for (std::size_t i = 0; i < cells; ++i) {
    const double x = state.grid.center(i) / core_radius;
    state.rho[i] = state.grid.center(i) < truncate ? rho_c / ((1.0 + x * x) * (1.0 + x * x)) : 0.0;
  }
  apply_velocity(state, velocity_slope);
  state.reset_floor();
  return state;
}

RadialState uniform_state(const Physics& phys, double rho_c, double radius, double r_max,
                          std::size_t cells, double velocity_slope) {
  RadialState state = make_state(phys, r_max, cells);
  for (std::size_t i = 0; i < cells; ++i) {
    state.rho[i] = state.grid.center(i) < radius ? rho_c : 0.0;
  }
  apply_velocity(state, velocity_slope);
  state.reset_floor();
  return state;
}

RadialState initial_state(const EvolveJob& job) {
  const auto& in = job.initial;
  switch (in.profile) {
    case InitialProfile::polytrope:
      return polytrope_star(job.phys, in.rho_c, job.r_max, job.cells, in.velocity_slope);
    case InitialProfile::stationary65:
      return stationary65_state(job.phys, in.A, in.truncate, job.r_max, job.cells);
    case InitialProfile::concentrated:
      return concentrated_state(job.phys, in.rho_c, in.core_radius, in.truncate, job.r_max,
                                job.cells, in.velocity_slope);
    case InitialProfile::uniform:
      return uniform_state(job.phys, in.rho_c, in.radius, job.r_max, job.cells,
                           in.velocity_slope);
    case InitialProfile::family: {
      const FamilySolution fam = make_family(in.family);
      const double a = family_scale(fam, 0.0);
      const double cut = fam.profile.support_edge() ? a * *fam.profile.support_edge()
                                                    : std::min(in.truncate, job.r_max);
      if (!fam.profile.support_edge() && cut / a > fam.profile.z_limit()) {
        throw InvalidInput("initial.truncate: beyond the integrated profile span");
      }
      if (!(cut < job.r_max)) throw InvalidInput("hydro.r_max: does not cover the family support");
      RadialState state = make_state(job.phys, job.r_max, job.cells);
      for (std::size_t i = 0; i < job.cells; ++i) {
        const double r = state.grid.center(i);
        if (r < cut) {
          state.rho[i] = family_density(fam, 0.0, r);
          state.u[i] = family_velocity(fam, 0.0, r);
        }
      }
      state.reset_floor();
      return state;
    }
    case InitialProfile::checkpoint: {
      RadialState state = load_checkpoint(in.checkpoint);
      if (state.phys.N != job.phys.N || state.phys.gamma != job.phys.gamma ||
          state.phys.K != job.phys.K || state.phys.g != job.phys.g) {
        throw InvalidInput("initial.checkpoint: physics differs from the [hydro] section");
      }
      state.phys.beta = job.phys.beta;
      if (state.floor == 0.0) state.reset_floor();
      return state;
    }
  }
  throw InvalidInput("unknown initial profile");
}

}  // namespace eplab::tools
