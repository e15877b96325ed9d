#include "eplab/radial_state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "eplab/dimension.hpp"
#include "eplab/errors.hpp"
#include "eplab/kernel.hpp"

namespace eplab {

double Physics::pressure(double rho) const {
  if (rho <= 0.0) return 0.0;
  return gamma == 1.0 ? K * rho : K * std::pow(rho, gamma);
}

double Physics::sound_speed(double rho) const {
  if (gamma == 1.0) return std::sqrt(K);
  if (rho <= 0.0) return 0.0;
  return std::sqrt(gamma * K * std::pow(rho, gamma - 1.0));
}

void validate(const Physics& phys) {
  if (phys.N < 2) throw InvalidInput("N must be >= 2, got " + std::to_string(phys.N));
  if (!(phys.gamma >= 1.0) || !std::isfinite(phys.gamma)) {
    throw InvalidInput("gamma must be >= 1, got " + std::to_string(phys.gamma));
  }
  if (!(phys.K > 0.0) || !std::isfinite(phys.K)) throw InvalidInput("K must be > 0");
  if (!(phys.g > 0.0) || !std::isfinite(phys.g)) throw InvalidInput("g must be > 0");
  if (!(phys.beta >= 0.0) || !std::isfinite(phys.beta)) throw InvalidInput("beta must be >= 0");
}

RadialGrid::RadialGrid(int N, double r_max, std::size_t cells) : N_(N), r_max_(r_max) {
  if (N < 1) throw InvalidInput("RadialGrid: N must be >= 1");
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw InvalidInput("RadialGrid: r_max must be > 0");
  if (cells < 4) throw InvalidInput("RadialGrid: need at least 4 cells");
  dr_ = r_max / static_cast<double>(cells);
  centers_.resize(cells);
  faces_.resize(cells + 1);
  volumes_.resize(cells);
  areas_.resize(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) {
    faces_[i] = (i == cells) ? r_max : dr_ * static_cast<double>(i);
    areas_[i] = std::pow(faces_[i], N - 1);
  }
  for (std::size_t i = 0; i < cells; ++i) {
    centers_[i] = dr_ * (static_cast<double>(i) + 0.5);
    volumes_[i] = (std::pow(faces_[i + 1], N) - std::pow(faces_[i], N)) / N;
  }
}

double RadialState::max_density() const {
  return rho.empty() ? 0.0 : *std::max_element(rho.begin(), rho.end());
}

void RadialState::reset_floor() { floor = 1e-14 * max_density(); }

RadialState make_state(const Physics& phys, double r_max, std::size_t cells) {
  validate(phys);
  RadialState s;
  s.phys = phys;
  s.grid = RadialGrid(phys.N, r_max, cells);
  s.rho.assign(cells, 0.0);
  s.u.assign(cells, 0.0);
  return s;
}

void validate(const RadialState& state) {
  validate(state.phys);
  if (state.grid.dimension() != state.phys.N) {
    throw InvalidInput("RadialState: grid dimension differs from physics N");
  }
  if (state.rho.size() != state.grid.size() || state.u.size() != state.grid.size()) {
    throw InvalidInput("RadialState: field sizes differ from grid size");
  }
  for (std::size_t i = 0; i < state.rho.size(); ++i) {
    if (!std::isfinite(state.rho[i]) || state.rho[i] < 0.0) {
      throw InvalidInput("RadialState: invalid density in cell " + std::to_string(i));
    }
    if (!std::isfinite(state.u[i])) {
      throw InvalidInput("RadialState: non-finite velocity in cell " + std::to_string(i));
    }
  }
  if (!(state.floor >= 0.0)) throw InvalidInput("RadialState: floor must be >= 0");
}

std::vector<double> enclosed_integral(const RadialState& state) {
  const auto& grid = state.grid;
  const int N = grid.dimension();
  std::vector<double> out(grid.size());
  double inner = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double left = grid.face(i);
    const double half = (std::pow(grid.center(i), N) - std::pow(left, N)) / N;
    out[i] = inner + state.rho[i] * half;
    inner += state.rho[i] * grid.volume(i);
  }
  return out;
}

std::vector<double> gravity_acceleration(const RadialState& state) {
  const auto& grid = state.grid;
  const int N = grid.dimension();
  const double coupling = dimension_constants(N).alpha * state.phys.g;
  std::vector<double> enclosed = enclosed_integral(state);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    enclosed[i] *= coupling / std::pow(grid.center(i), N - 1);
  }
  return enclosed;
}

GravityField poisson_radial(const RadialState& state) {
  const auto& grid = state.grid;
  const int N = grid.dimension();
  const std::size_t n = grid.size();
  GravityField field;
  field.phi_r = gravity_acceleration(state);
  field.phi.assign(n, 0.0);

  const double weight = state.phys.g * unit_sphere_area(N);
  const std::vector<double> inner = enclosed_integral(state);
  double tail = 0.0;  // sum over cells j > i of rho_j int_cell s^{N-1} k(s) ds
  for (std::size_t k = n; k-- > 0;) {
    const double r = grid.center(k);
    const double own = state.rho[k] * kernel_moment(N, r, grid.face(k + 1));
    field.phi[k] = weight * (ring_kernel(N, r) * inner[k] + own + tail);
    tail += state.rho[k] * kernel_moment(N, grid.face(k), grid.face(k + 1));
  }
  return field;
}

double support_radius(const RadialState& state) {
  for (std::size_t i = state.rho.size(); i-- > 0;) {
    if (state.rho[i] > state.floor) return state.grid.center(i);
  }
  return 0.0;
}

}  // namespace eplab
