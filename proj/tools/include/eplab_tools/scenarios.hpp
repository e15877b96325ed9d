#pragma once

#include <cstddef>

#include "eplab/radial_state.hpp"
#include "eplab_tools/jobs.hpp"

namespace eplab::tools {

/// K for which the N = 3 polytrope of index 1 / (gamma - 1) with central
/// density rho_c has radius R.
double polytrope_constant_for_radius(double gamma, double rho_c, double R, double g = 1.0);

/// Lane-Emden star rho = rho_c theta^n (N = 3, n = 1 / (gamma - 1) < 5) with
/// u = slope r inside the support.
RadialState polytrope_star(const Physics& phys, double rho_c, double r_max, std::size_t cells,
                           double velocity_slope = 0.0);

/// gamma = 6/5 closed-form profile cut at r = truncate, at rest.
RadialState stationary65_state(const Physics& phys, double A, double truncate, double r_max,
                               std::size_t cells);

/// rho = rho_c (1 + r^2 / core^2)^{-2} for r < truncate.
RadialState concentrated_state(const Physics& phys, double rho_c, double core_radius,
                               double truncate, double r_max, std::size_t cells,
                               double velocity_slope = 0.0);

/// rho = rho_c for r < radius.
RadialState uniform_state(const Physics& phys, double rho_c, double radius, double r_max,
                          std::size_t cells, double velocity_slope = 0.0);

/// Initial state described by an evolve job; floor set from the result.
RadialState initial_state(const EvolveJob& job);

}  // namespace eplab::tools
