#include "eplab/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eplab/dimension.hpp"
#include "eplab/errors.hpp"
#include "eplab/kernel.hpp"

namespace eplab {

namespace {

double cell_moment(const RadialGrid& grid, std::size_t i, int power) {
  return (std::pow(grid.face(i + 1), power) - std::pow(grid.face(i), power)) / power;
}

void check_gravity(const RadialState& state, const GravityField& gravity) {
  if (gravity.phi_r.size() != state.size()) {
    throw InvalidInput("gravity field size differs from the state grid");
  }
}

}  // namespace

double EnergyBreakdown::scale() const {
  return std::max({std::abs(kinetic), std::abs(internal), std::abs(potential)});
}

double total_mass(const RadialState& state) {
  double sum = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) sum += state.rho[i] * state.grid.volume(i);
  return unit_sphere_area(state.phys.N) * sum;
}

double pressure_integral(const RadialState& state) {
  double sum = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    sum += state.phys.pressure(state.rho[i]) * state.grid.volume(i);
  }
  return unit_sphere_area(state.phys.N) * sum;
}

double potential_energy(const RadialState& state) {
  const auto& grid = state.grid;
  const int N = state.phys.N;
  double inner = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double rho = state.rho[i];
    if (rho != 0.0) {
      const double a = grid.face(i), b = grid.face(i + 1);
      const double low = kernel_moment(N, a, b);
      const double high = kernel_moment_high(N, a, b);
      sum += rho * (inner * low + rho * (high - std::pow(a, N) * low) / N);
    }
    inner += rho * grid.volume(i);
  }
  const double area = unit_sphere_area(N);
  return state.phys.g * area * area * sum;
}

EnergyBreakdown energy(const RadialState& state) {
  const auto& phys = state.phys;
  double kin = 0.0, internal = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double rho = state.rho[i];
    const double vol = state.grid.volume(i);
    kin += 0.5 * rho * state.u[i] * state.u[i] * vol;
    if (phys.gamma == 1.0) {
      if (rho > state.floor && rho > 0.0) internal += phys.K * rho * std::log(rho) * vol;
    } else {
      internal += phys.pressure(rho) / (phys.gamma - 1.0) * vol;
    }
  }
  const double area = unit_sphere_area(phys.N);
  EnergyBreakdown e;
  e.t = state.t;
  e.kinetic = area * kin;
  e.internal = area * internal;
  e.potential = potential_energy(state);
  e.total = e.kinetic + e.internal + e.potential;
  return e;
}

EnergyBreakdown energy(const RadialState& state, const GravityField& gravity) {
  check_gravity(state, gravity);
  return energy(state);
}

VirialSample virial_sample(const RadialState& state) {
  const auto& phys = state.phys;
  const auto& grid = state.grid;
  const int N = phys.N;
  double H = 0.0, Hdot = 0.0, dynamic = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double rho = state.rho[i];
    if (rho == 0.0) continue;
    H += rho * cell_moment(grid, i, N + 2);
    Hdot += rho * state.u[i] * cell_moment(grid, i, N + 1);
    const double pressure_weight = (N == 2) ? 2.0 : static_cast<double>(N);
    dynamic += (rho * state.u[i] * state.u[i] + pressure_weight * phys.pressure(rho)) *
               grid.volume(i);
  }
  const double area = unit_sphere_area(N);
  VirialSample v;
  v.t = state.t;
  v.H = area * H;
  v.Hdot_formula = 2.0 * area * Hdot;
  if (N == 2) {
    const double M = total_mass(state);
    v.Hddot_formula = 2.0 * area * dynamic - phys.g * M * M;
  } else {
    v.Hddot_formula = 2.0 * area * dynamic + (N - 2.0) * 2.0 * potential_energy(state);
  }
  return v;
}

VirialSample virial_sample(const RadialState& state, const GravityField& gravity) {
  check_gravity(state, gravity);
  return virial_sample(state);
}

std::vector<VirialSample> virial_series(std::vector<VirialSample> s) {
  const std::size_t n = s.size();
  if (n < 3) throw InvalidInput("virial_series: need at least 3 samples");
  const double h = (s.back().t - s.front().t) / static_cast<double>(n - 1);
  if (!(h > 0.0)) throw InvalidInput("virial_series: samples must increase in t");
  for (std::size_t k = 1; k < n; ++k) {
    if (std::abs((s[k].t - s[k - 1].t) - h) > 1e-9 * h) {
      throw InvalidInput("virial_series: samples are not evenly spaced (at index " +
                         std::to_string(k) + ")");
    }
  }
  auto H = [&](std::size_t k) { return s[k].H; };
  for (std::size_t k = 1; k + 1 < n; ++k) {
    s[k].Hdot_measured = (H(k + 1) - H(k - 1)) / (2 * h);
    s[k].Hddot_measured = (H(k + 1) - 2 * H(k) + H(k - 1)) / (h * h);
  }
  s[0].Hdot_measured = (-3 * H(0) + 4 * H(1) - H(2)) / (2 * h);
  s[n - 1].Hdot_measured = (3 * H(n - 1) - 4 * H(n - 2) + H(n - 3)) / (2 * h);
  if (n >= 4) {
    s[0].Hddot_measured = (2 * H(0) - 5 * H(1) + 4 * H(2) - H(3)) / (h * h);
    s[n - 1].Hddot_measured =
        (2 * H(n - 1) - 5 * H(n - 2) + 4 * H(n - 3) - H(n - 4)) / (h * h);
  } else {
    s[0].Hddot_measured = s[1].Hddot_measured;
    s[n - 1].Hddot_measured = s[1].Hddot_measured;
  }
  for (auto& v : s) v.measured = true;
  return s;
}

double gap_functional(const RadialState& state) {
  double sum = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double rho = state.rho[i];
    sum += (rho * state.u[i] * state.u[i] + 2.0 * state.phys.pressure(rho)) *
           state.grid.volume(i);
  }
  return 2.0 * unit_sphere_area(state.phys.N) * sum;
}

StationaryReport stationary_identities(const RadialState& state) {
  StationaryReport rep;
  const int N = state.phys.N;
  const double P = pressure_integral(state);
  if (N == 2) {
    const double M = total_mass(state);
    rep.identity = "int P = g M^2 / 4";
    rep.lhs = P;
    rep.rhs = state.phys.g * M * M / 4.0;
  } else {
    rep.identity = "N int P = -((N - 2) / 2) int rho Phi";
    rep.lhs = N * P;
    rep.rhs = -(N - 2.0) * potential_energy(state);
  }
  const double denom = std::max(std::abs(rep.lhs), std::abs(rep.rhs));
  rep.mismatch = denom > 0.0 ? std::abs(rep.lhs - rep.rhs) / denom : 0.0;
  for (double u : state.u) rep.max_speed = std::max(rep.max_speed, std::abs(u));
  rep.moving = rep.max_speed > 0.0;
  return rep;
}

StationaryReport stationary_identities(const RadialState& state, const GravityField& gravity) {
  check_gravity(state, gravity);
  return stationary_identities(state);
}

}  // namespace eplab
