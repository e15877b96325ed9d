#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "eplab/diagnostics.hpp"
#include "eplab/radial_state.hpp"

namespace eplab {

enum class Reconstruction { first_order, muscl };
enum class Limiter { minmod, mc };

std::string_view to_string(Reconstruction r);
std::string_view to_string(Limiter l);
Reconstruction parse_reconstruction(std::string_view name);
Limiter parse_limiter(std::string_view name);

struct HydroOptions {
  Reconstruction reconstruction = Reconstruction::muscl;
  Limiter limiter = Limiter::mc;
  bool gravity = true;
  bool pressure = true;
  double cfl = 0.4;
};

struct StepReport {
  /// Cells whose density went negative and was clamped to zero.
  std::size_t clamped_cells = 0;
  /// Mass added by those clamps (N V(N) sum |rho_i| V_i).
  double clamped_mass = 0.0;
};

/// cfl times the minimum over cells of 2 V_i / ((A_- + A_+) s_i), with s_i the
/// largest |u| + c over the cell and its neighbours, further limited by the
/// gravitational free-fall step sqrt(dr / |Phi_r|) and 1 / beta. Infinite for
/// a state with no signal speed, gravity or damping.
double max_stable_dt(const RadialState& state, const HydroOptions& opts = {});

/// One SSP-RK2 step of the finite-volume scheme (Rusanov fluxes, optional
/// limited MUSCL reconstruction of rho and u, reflecting origin, outflow outer
/// boundary). Gravity is recomputed in each stage.
///
/// Throws InvalidInput if dt exceeds max_stable_dt, SupportHitBoundary if
/// density above the floor reaches one of the two outermost cells, and
/// NumericalFailure on non-finite values.
RadialState step(const RadialState& state, double dt, const HydroOptions& opts = {},
                 StepReport* report = nullptr);

enum class Termination { reached_t_end, support_hit_boundary, collapse_indicator };
std::string_view to_string(Termination t);

struct Snapshot {
  RadialState state;
  EnergyBreakdown energy;
  VirialSample virial;
  double gap_functional = 0.0;
  double max_density = 0.0;
  double support_radius = 0.0;
};

Snapshot take_snapshot(const RadialState& state);

struct EvolveOptions {
  double t_end = 1.0;
  double snapshot_every = 0.1;
  HydroOptions hydro{};
  /// Collapse indicator threshold on max rho / initial max rho.
  double collapse_factor = 1e3;
  /// TV(u) growth beyond this factor flags the end of the smooth regime.
  double tv_growth_factor = 10.0;
  std::size_t max_steps = 20'000'000;
  std::function<void(const Snapshot&)> on_snapshot;
};

struct EvolveResult {
  /// States at t0 + k * snapshot_every.
  std::vector<Snapshot> snapshots;
  /// State at termination (may lie between cadence points).
  Snapshot final;
  Termination termination = Termination::reached_t_end;
  std::string detail;
  std::size_t steps = 0;
  double initial_max_density = 0.0;
  double max_density_ratio = 1.0;
  std::size_t clamped_cells = 0;
  double clamped_mass = 0.0;
  double max_tv_ratio = 1.0;
  bool smooth_regime_ended = false;
};

/// Steps from state0 to t_end, landing exactly on each snapshot time. Stops
/// early on the collapse indicator or when the support reaches the outer
/// boundary; both are reported in termination, not thrown. The floor is set
/// from state0 if it is zero.
EvolveResult evolve(RadialState state0, const EvolveOptions& opts);

/// sup |dP/dr + rho Phi_r| by centred differences over cells 0..n-2 whose
/// stencil lies above the floor; u is ignored.
double hydrostatic_residual(const RadialState& state);
/// max |dP/dr| over the same cells.
double pressure_gradient_scale(const RadialState& state);

}  // namespace eplab
