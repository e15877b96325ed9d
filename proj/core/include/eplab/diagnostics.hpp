#pragma once

#include <string>
#include <vector>

#include "eplab/radial_state.hpp"

namespace eplab {

struct EnergyBreakdown {
  double t = 0.0;
  double kinetic = 0.0;
  double internal = 0.0;
  double potential = 0.0;
  double total = 0.0;

  /// Largest component magnitude, the scale for E = 0 tests.
  double scale() const;
};

struct VirialSample {
  double t = 0.0;
  double H = 0.0;
  double Hdot_formula = 0.0;
  double Hddot_formula = 0.0;
  double Hdot_measured = 0.0;
  double Hddot_measured = 0.0;
  bool measured = false;
};

/// M = N V(N) sum_i rho_i V_i (exact for piecewise-constant rho).
double total_mass(const RadialState& state);

/// int P dx over the state.
double pressure_integral(const RadialState& state);

/// W = (1/2) int rho Phi dx, evaluated in closed form for piecewise-constant
/// rho with the ring kernel k(max(r, s)). For N = 2 this is
/// (g/2) double-integral rho rho ln|x - y|.
double potential_energy(const RadialState& state);

/// Kinetic int rho u^2 / 2; internal int P / (gamma - 1), or int K rho ln rho
/// over cells above the floor for gamma = 1; potential W.
EnergyBreakdown energy(const RadialState& state);
/// As above; gravity must match the state's grid (it is only size-checked,
/// the potential term does not depend on it).
EnergyBreakdown energy(const RadialState& state, const GravityField& gravity);

/// H = int rho r^2, Hdot = 2 int rho u r and
///   Hddot = 2 int (rho u^2 + N P) + (N - 2) int rho Phi   (N >= 3)
///   Hddot = 2 int (rho u^2 + 2 P) - g M^2                 (N = 2)
VirialSample virial_sample(const RadialState& state);
VirialSample virial_sample(const RadialState& state, const GravityField& gravity);

/// Fills Hdot_measured and Hddot_measured by second-order differences of H
/// (centred inside, one-sided at the ends). Requires >= 3 samples evenly
/// spaced in t to relative tolerance 1e-9.
std::vector<VirialSample> virial_series(std::vector<VirialSample> samples);

/// 2 int (rho u^2 + 2 P), the functional bounded in the 2D gap condition.
double gap_functional(const RadialState& state);

struct StationaryReport {
  std::string identity;
  double lhs = 0.0;
  double rhs = 0.0;
  double mismatch = 0.0;
  /// max |u|; nonzero means the state is not at rest.
  double max_speed = 0.0;
  bool moving = false;
};

/// N int P = -((N - 2)/2) int rho Phi for N >= 3; int P = g M^2 / 4 for N = 2.
/// mismatch = |lhs - rhs| / max(|lhs|, |rhs|), 0 when both vanish.
StationaryReport stationary_identities(const RadialState& state);
StationaryReport stationary_identities(const RadialState& state, const GravityField& gravity);

}  // namespace eplab
